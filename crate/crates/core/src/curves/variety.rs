use std::collections::HashMap;

use crate::arith::{have_common_zero, BinaryForm, Field};
use crate::curves::poly::Poly;
use crate::error::{Error, Result};

/// A hypersurface `F = 0` in `P^n`, `F` homogeneous of degree `d >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceForm<K: Field> {
    ambient_dim: usize,
    degree: u32,
    equation: Poly<K>,
}

impl<K: Field> HypersurfaceForm<K> {
    pub fn new(ambient_dim: usize, equation: Poly<K>) -> Result<Self> {
        if equation.nvars() != ambient_dim + 1 {
            return Err(Error::Argument(format!(
                "equation has {} variables, P^{ambient_dim} needs {}",
                equation.nvars(),
                ambient_dim + 1
            )));
        }
        if equation.is_zero() {
            return Err(Error::Argument("the zero polynomial does not define a hypersurface".into()));
        }
        let degree = equation
            .homogeneous_degree()
            .ok_or_else(|| Error::Argument("hypersurface equation is not homogeneous".into()))?;
        if degree < 2 {
            return Err(Error::Argument(format!("hypersurface degree must be at least 2, got {degree}")));
        }
        Ok(HypersurfaceForm { ambient_dim, degree, equation })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn equation(&self) -> &Poly<K> {
        &self.equation
    }

    pub fn field(&self) -> &K {
        self.equation.field()
    }
}

/// A morphism `P^1 → P^n` given by forms `(φ_0, ..., φ_n)` of a common
/// degree `e >= 1` without common zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalCurveMap<K: Field> {
    components: Vec<BinaryForm<K>>,
}

impl<K: Field> RationalCurveMap<K> {
    pub fn new(components: Vec<BinaryForm<K>>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Argument("a curve in P^n needs at least two components".into()));
        }
        let e = components[0].degree();
        if components.iter().any(|c| c.degree() != e) {
            return Err(Error::Argument("curve components must share one degree".into()));
        }
        if e == 0 {
            return Err(Error::Argument("a curve needs components of degree at least 1".into()));
        }
        let field = components[0].field();
        if components.iter().any(|c| c.field() != field) {
            return Err(Error::Argument("curve components live over different fields".into()));
        }
        if components.iter().all(|c| c.is_zero()) {
            return Err(Error::Argument("all curve components are zero".into()));
        }
        if have_common_zero(&components) {
            return Err(Error::Argument("curve components have a common zero on P^1".into()));
        }
        Ok(RationalCurveMap { components })
    }

    pub fn components(&self) -> &[BinaryForm<K>] {
        &self.components
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    pub fn field(&self) -> &K {
        self.components[0].field()
    }

    /// `φ ∘ g` for the automorphism `g: (s, t) ↦ (a s + b t, c s + d t)`.
    pub fn reparameterize(&self, a: &K::Elem, b: &K::Elem, c: &K::Elem, d: &K::Elem) -> Result<Self> {
        let k = self.field();
        if k.is_zero(&k.sub(&k.mul(a, d), &k.mul(b, c))) {
            return Err(Error::Argument("reparameterization matrix is singular".into()));
        }
        Self::new(self.components.iter().map(|f| f.substitute_linear(a, b, c, d)).collect())
    }
}

/// `P(φ_0, ..., φ_n)` as a binary form of degree `deg P · e`.
pub fn compose<K: Field>(poly: &Poly<K>, phi: &RationalCurveMap<K>) -> BinaryForm<K> {
    let k = phi.field();
    let e = phi.degree();
    let Some(d) = poly.homogeneous_degree() else {
        return BinaryForm::zero(k, 0);
    };
    let mut powers: HashMap<(usize, u32), BinaryForm<K>> = HashMap::new();
    let mut acc = BinaryForm::zero(k, d as usize * e);
    for (exps, c) in poly.terms() {
        let mut term = BinaryForm::constant(k, c.clone());
        for (i, &x) in exps.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let pw = powers.entry((i, x)).or_insert_with(|| phi.components()[i].pow(x));
            term = term.mul(pw);
        }
        acc = acc.add(&term).expect("homogeneous terms share degree");
    }
    acc
}

fn check_compatible<K: Field>(x: &HypersurfaceForm<K>, phi: &RationalCurveMap<K>) -> Result<()> {
    if x.ambient_dim() != phi.ambient_dim() {
        return Err(Error::Argument(format!(
            "hypersurface lives in P^{} but the curve maps to P^{}",
            x.ambient_dim(),
            phi.ambient_dim()
        )));
    }
    if x.field() != phi.field() {
        return Err(Error::Argument("hypersurface and curve are over different fields".into()));
    }
    Ok(())
}

/// Whether `F(φ_0, ..., φ_n)` vanishes identically.
pub fn on_curve_check<K: Field>(x: &HypersurfaceForm<K>, phi: &RationalCurveMap<K>) -> Result<bool> {
    check_compatible(x, phi)?;
    Ok(compose(x.equation(), phi).is_zero())
}

/// `(∂F/∂x_i)(φ)`, each of degree `(d - 1) e` (zero forms included).
pub fn gradient_along<K: Field>(x: &HypersurfaceForm<K>, phi: &RationalCurveMap<K>) -> Vec<BinaryForm<K>> {
    let nominal = (x.degree() as usize - 1) * phi.degree();
    (0..=x.ambient_dim())
        .map(|i| {
            let g = compose(&x.equation().partial(i), phi);
            if g.is_zero() {
                BinaryForm::zero(phi.field(), nominal)
            } else {
                g
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    Ok,
    Degenerate,
}

/// Smoothness of `X` along `φ`: the pulled-back gradient must not vanish
/// at any point of `P^1`.
pub fn singularity_probe_along<K: Field>(x: &HypersurfaceForm<K>, phi: &RationalCurveMap<K>) -> Result<Probe> {
    if !on_curve_check(x, phi)? {
        return Err(Error::Precondition("curve does not lie on the hypersurface".into()));
    }
    let grad = gradient_along(x, phi);
    Ok(if have_common_zero(&grad) { Probe::Degenerate } else { Probe::Ok })
}
