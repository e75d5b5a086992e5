use std::fmt;

use crate::arith::Field;
use crate::error::{Error, Result};

/// A homogeneous form of nominal degree `d` in the variables `s`, `t`.
///
/// `coeffs[i]` is the coefficient of `s^i t^(d-i)`. The zero form keeps its
/// nominal degree so sums stay graded.
#[derive(Clone, PartialEq)]
pub struct BinaryForm<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> BinaryForm<K> {
    pub fn zero(field: &K, degree: usize) -> Self {
        BinaryForm { field: field.clone(), coeffs: vec![field.zero(); degree + 1] }
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        BinaryForm { field: field.clone(), coeffs: vec![c] }
    }

    /// `c · s^s_exp · t^t_exp`.
    pub fn monomial(field: &K, s_exp: usize, t_exp: usize, c: K::Elem) -> Self {
        let mut f = Self::zero(field, s_exp + t_exp);
        f.coeffs[s_exp] = c;
        f
    }

    pub fn s(field: &K) -> Self {
        Self::monomial(field, 1, 0, field.one())
    }

    pub fn t(field: &K) -> Self {
        Self::monomial(field, 0, 1, field.one())
    }

    /// Builds a form from `coeffs[i]` = coefficient of `s^i t^(len-1-i)`.
    pub fn from_coeffs(field: &K, coeffs: Vec<K::Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Structural("a binary form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { field: field.clone(), coeffs })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    /// Coefficient of `s^i t^(d-i)`.
    pub fn coeff(&self, s_exp: usize) -> &K::Elem {
        &self.coeffs[s_exp]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// Coefficients in the lexicographic monomial order `s^d, s^(d-1)t, ..., t^d`.
    pub fn lex_coeffs(&self) -> impl Iterator<Item = &K::Elem> {
        self.coeffs.iter().rev()
    }

    pub fn from_lex_coeffs(field: &K, mut lex: Vec<K::Elem>) -> Result<Self> {
        lex.reverse();
        Self::from_coeffs(field, lex)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Structural(format!(
                "cannot add forms of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(BinaryForm { field: self.field.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| self.field.neg(c))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        self.map(|x| self.field.mul(x, c))
    }

    fn map(&self, f: impl Fn(&K::Elem) -> K::Elem) -> Self {
        BinaryForm { field: self.field.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        let mut out = vec![k.zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        BinaryForm { field: k.clone(), coeffs: out }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.field.one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by the monomial `s^s_exp t^t_exp`.
    pub fn shift(&self, s_exp: usize, t_exp: usize) -> Self {
        let k = &self.field;
        let mut out = vec![k.zero(); self.degree() + s_exp + t_exp + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + s_exp] = c.clone();
        }
        BinaryForm { field: k.clone(), coeffs: out }
    }

    pub fn eval(&self, s: &K::Elem, t: &K::Elem) -> K::Elem {
        let k = &self.field;
        let d = self.degree();
        let mut acc = k.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..i {
                term = k.mul(&term, s);
            }
            for _ in 0..d - i {
                term = k.mul(&term, t);
            }
            acc = k.add(&acc, &term);
        }
        acc
    }

    /// Precomposes with the linear substitution `s -> a s + b t`, `t -> c s + d t`.
    pub fn substitute_linear(&self, a: &K::Elem, b: &K::Elem, c: &K::Elem, d: &K::Elem) -> Self {
        let k = &self.field;
        let s_img = BinaryForm { field: k.clone(), coeffs: vec![b.clone(), a.clone()] };
        let t_img = BinaryForm { field: k.clone(), coeffs: vec![d.clone(), c.clone()] };
        let deg = self.degree();
        let mut acc = Self::zero(k, deg);
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if k.is_zero(coeff) {
                continue;
            }
            let term = s_img.pow(i as u32).mul(&t_img.pow((deg - i) as u32)).scale(coeff);
            acc = acc.add(&term).expect("homogeneous substitution keeps degree");
        }
        acc
    }

    /// Dehomogenization at `t = 1`, as a dense univariate polynomial in `s`
    /// with trailing zeros stripped.
    fn affine(&self) -> Vec<K::Elem> {
        let mut v = self.coeffs.clone();
        while v.len() > 1 && self.field.is_zero(v.last().unwrap()) {
            v.pop();
        }
        v
    }
}

fn poly_rem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut r = a.to_vec();
    let lead_inv = k.inv(b.last().unwrap()).expect("divisor is normalized");
    while r.len() >= b.len() && !(r.len() == 1 && k.is_zero(&r[0])) {
        let shift = r.len() - b.len();
        let factor = k.mul(r.last().unwrap(), &lead_inv);
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = k.sub(&r[i + shift], &k.mul(&factor, bc));
        }
        r.pop();
        while r.len() > 1 && k.is_zero(r.last().unwrap()) {
            r.pop();
        }
        if r.is_empty() {
            r.push(k.zero());
        }
    }
    r
}

fn poly_gcd<K: Field>(k: &K, a: Vec<K::Elem>, b: Vec<K::Elem>) -> Vec<K::Elem> {
    let is_zero = |p: &[K::Elem]| p.iter().all(|c| k.is_zero(c));
    let (mut a, mut b) = (a, b);
    while !is_zero(&b) {
        let r = poly_rem(k, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Whether the forms share a zero on `P^1` over the algebraic closure.
///
/// Zero forms vanish everywhere; if every form is zero the answer is `true`.
pub fn have_common_zero<K: Field>(forms: &[BinaryForm<K>]) -> bool {
    let nonzero: Vec<_> = forms.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return true;
    };
    let k = first.field();
    // the point [1:0] is a zero of f iff the s^deg coefficient vanishes
    if nonzero.iter().all(|f| k.is_zero(f.coeff(f.degree()))) {
        return true;
    }
    let mut g = first.affine();
    for f in &nonzero[1..] {
        g = poly_gcd(k, g, f.affine());
        if g.len() == 1 {
            return false;
        }
    }
    g.len() > 1
}

impl<K: Field> fmt::Debug for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> fmt::Display for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        let d = self.degree();
        let mut terms = Vec::new();
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if k.is_zero(c) {
                continue;
            }
            let mut mono = String::new();
            for (var, e) in [("s", i), ("t", d - i)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    e => mono.push_str(&format!("{var}^{e}")),
                }
            }
            let coeff = k.render(c);
            terms.push(match (mono.is_empty(), k.is_one(c)) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) => format!("{coeff}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
