"""Smoke tests for the _susyfactory extension module."""
import math
import sys

import _susyfactory as sf


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def test_expression_layer():
    assert sf.evaluate("i*x", 2.0) == 2j
    assert sf.evaluate("x^2", 3.0) == 9.0
    assert approx(sf.evaluate("i*x - i*lam/x", 1.0, {"lam": 3.0}), -2j)
    assert sf.is_pt_invariant("i*x")
    assert not sf.is_pt_invariant("i*x - i*g", {"g": 1.0})
    assert sf.is_pt_invariant("i*x + i*lam/x", {"lam": 3.0})
    # derivative of x^2 evaluates to 2x
    d = sf.differentiate("x^2")
    assert approx(sf.evaluate(d, 1.7), 3.4)
    # conj_reflect flips the sign of the constant part of ix - ig
    r = sf.conj_reflect("i*x - i*g")
    assert approx(sf.evaluate(r, 0.0, {"g": 1.0}), 1j)


def test_factor():
    f = sf.factor(w="i*x", convention="type1")
    assert f["h_plus"] == "p^2 + x^2 + 1"
    assert f["h_minus"] == "p^2 + x^2 - 1"
    assert f["sym_plus"] == "hermitian"
    f2 = sf.factor(w1="x", w2="x^3", convention="type2")
    assert f2["sym_plus"] == "pt_symmetric"
    try:
        sf.factor(w1="x", w2="x^2", convention="type2")
    except RuntimeError:
        pass
    else:
        raise AssertionError("even-product violation not raised")


def test_spectrum_and_verify():
    v = sf.verify(w="i*x", convention="type1", method="ho", n_keep="48", tol="1e-8",
                  expect="susy")
    assert v["matches_expected"]
    assert v["relation"] == "susy_shift"
    minus = v["minus"]["values"]
    for n in range(5):
        assert approx(minus[n].real, 2.0 * n, 1e-8)
        assert approx(minus[n].imag, 0.0, 1e-10)


def test_analytic():
    assert sf.shape_invariant_energy(sf.ShapeInvariantCase.IID_minus, 3.0, 2) == 4.0
    assert sf.shape_invariant_energy(sf.ShapeInvariantCase.IIE_plus, 3.0, 1) == 9.0
    assert approx(sf.ground_state_eval(sf.ShapeInvariantCase.IID_minus, 3.0, 1.0),
                  math.exp(-0.5))
    assert sf.su11_energy(1, 1, 0, 2.0, 0, -2.0, 3) == 6.0  # (p+ig)^2+x^2-1, g=1: E=2n


def main():
    tests = [test_expression_layer, test_factor, test_spectrum_and_verify, test_analytic]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print("smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
