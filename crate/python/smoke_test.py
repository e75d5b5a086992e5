"""Smoke test for the sheafcert Python module.

Build and run from the repository root:

    cargo build --release -p sheafcert-python
    cp target/release/libsheafcert_py.so python/sheafcert.so
    python3 python/smoke_test.py
"""

import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import sheafcert  # noqa: E402


def main() -> None:
    assert sheafcert.binom(5, 2) == 10
    assert sheafcert.binom(-1, 0) == 0
    assert sheafcert.bott_dimension(2, 0, 1, 2) == 3
    assert sheafcert.bott_dimension(3, 1, 1, 0) == 1

    cubic = sheafcert.CompleteIntersection(4, [3])
    assert cubic.dim == 3 and cubic.degree == 3
    assert cubic.hilbert_h0(1) == 5
    assert cubic.mu_omega() == Fraction(-2)
    assert cubic.subsheaf_slope_ceiling(1) == Fraction(-3)
    report = json.loads(cubic.slope_report())
    assert report["verdict"] == "stable", report

    cert = sheafcert.CompleteIntersection(4, [2]).verify_vanishing(1, 1, -1)
    assert cert is not None and sheafcert.check_certificate(cert)
    mutated = json.loads(cert)
    mutated["claim"]["t"] = 0
    assert not sheafcert.check_certificate(json.dumps(mutated))
    assert sheafcert.CompleteIntersection(3).verify_vanishing(1, 1, 0) is None

    rows = sheafcert.CompleteIntersection(5, [3, 2]).sweep(-8)
    assert rows and all(ok for _, ok in rows)

    text = "F: x0 x3 - x1 x2\nphi: (s, t, 0, 0)\n"
    analysis = json.loads(sheafcert.splitting_from_text(text))
    assert analysis["curves"][0]["splitting"] == [2, 0]
    assert analysis["separably_uniruled"] == "yes"

    verdict, rule, premises = sheafcert.implication_verdict(
        picard_rank_one=True, separably_uniruled="yes", tangent_stable="yes", tangent_semistable="yes"
    )
    assert verdict == "yes" and rule == "picard-one-stability", (verdict, rule)
    assert "separably-uniruled" in premises

    for bad in (lambda: sheafcert.CompleteIntersection(4, [1, 3]),
                lambda: sheafcert.check_certificate("{"),
                lambda: sheafcert.implication_verdict(fano=True, separably_uniruled="maybe")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
