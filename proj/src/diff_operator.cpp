#include "susyfactory/diff_operator.hpp"

#include "susyfactory/errors.hpp"

namespace susy {

DiffOperator DiffOperator::coefficient(CoeffFn f) { return term(std::move(f), 0); }

DiffOperator DiffOperator::term(CoeffFn f, int order) {
  if (order < 0 || order > 2) throw OrderOverflow("derivative order must be in 0..2");
  DiffOperator op;
  op.terms_[order] = std::move(f);
  return op;
}

DiffOperator DiffOperator::derivative(int order) {
  return term(CoeffFn(Complex(1.0, 0.0)), order);
}

DiffOperator DiffOperator::momentum_squared() {
  return term(CoeffFn(Complex(-1.0, 0.0)), 2);
}

void DiffOperator::set_coeff(int order, CoeffFn f) {
  if (order < 0 || order > 2) throw OrderOverflow("derivative order must be in 0..2");
  terms_[order] = std::move(f);
}

int DiffOperator::order() const {
  for (int m = 2; m >= 0; --m)
    if (!terms_[m].is_zero()) return m;
  return 0;
}

bool DiffOperator::is_zero() const {
  return terms_[0].is_zero() && terms_[1].is_zero() && terms_[2].is_zero();
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (int m = 0; m < 3; ++m) terms_[m] += o.terms_[m];
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (int m = 0; m < 3; ++m) terms_[m] -= o.terms_[m];
  return *this;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  for (int m = 0; m < 3; ++m)
    if (!(terms_[m] == o.terms_[m])) return false;
  return true;
}

bool DiffOperator::approx_equal(const DiffOperator& o, double rel_tol) const {
  for (int m = 0; m < 3; ++m)
    if (!terms_[m].approx_equal(o.terms_[m], rel_tol)) return false;
  return true;
}

DiffOperator DiffOperator::scaled(Complex f) const {
  DiffOperator r;
  for (int m = 0; m < 3; ++m) r.terms_[m] = terms_[m].scaled(f);
  return r;
}

DiffOperator multiply(const DiffOperator& left, const DiffOperator& right) {
  if (left.order() + right.order() > 2)
    throw OrderOverflow("operator product exceeds order 2");
  static const double binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  DiffOperator out;
  for (int j = 0; j <= 2; ++j) {
    const CoeffFn& f = left.coeff(j);
    if (f.is_zero()) continue;
    for (int k = 0; k + j <= 2; ++k) {
      const CoeffFn& g = right.coeff(k);
      if (g.is_zero()) continue;
      CoeffFn gl = g;  // g^(l)
      for (int l = 0; l <= j; ++l) {
        if (l > 0) gl = gl.derivative();
        CoeffFn c = (f * gl).scaled(binom[j][l]);
        out.set_coeff(j + k - l, out.coeff(j + k - l) + c);
      }
    }
  }
  return out;
}

DiffOperator scale(const DiffOperator& h, double factor) {
  if (factor == 0.0) throw InputError("scale factor must be nonzero");
  return h.scaled(Complex(factor, 0.0));
}

DiffOperator DiffOperator::adjoint() const {
  static const double binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  DiffOperator out;
  for (int m = 0; m <= 2; ++m) {
    if (terms_[m].is_zero()) continue;
    CoeffFn fl = terms_[m].conjugated();  // conj(f)^(l)
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    for (int l = 0; l <= m; ++l) {
      if (l > 0) fl = fl.derivative();
      out.set_coeff(m - l, out.coeff(m - l) + fl.scaled(sgn * binom[m][l]));
    }
  }
  return out;
}

DiffOperator DiffOperator::pt_image() const {
  DiffOperator r;
  for (int m = 0; m < 3; ++m) {
    CoeffFn f = terms_[m].pt_image();
    if (m % 2 == 1) f = -f;  // D -> -D under parity
    r.terms_[m] = f;
  }
  return r;
}

Symmetry classify(const DiffOperator& h) {
  Symmetry s;
  s.hermitian = h.is_hermitian();
  s.pt_symmetric = h.is_pt_symmetric();
  return s;
}

std::string to_string(SymmetryTag t) {
  switch (t) {
    case SymmetryTag::hermitian:
      return "hermitian";
    case SymmetryTag::pt_symmetric:
      return "pt_symmetric";
    default:
      return "neither";
  }
}

std::string DiffOperator::to_string() const {
  // p-form: f2 D^2 = -f2 p^2 ; f1 D = i f1 p ; f0.
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (piece.empty() || piece == "0") return;
    if (out.empty()) {
      out = piece;
    } else if (piece.rfind("-", 0) == 0) {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  };
  const CoeffFn& f2 = terms_[2];
  if (!f2.is_zero()) {
    CoeffFn pc = f2.scaled(Complex(-1.0, 0.0));
    if (pc.is_constant() && pc.constant_part() == Complex(1.0, 0.0))
      append("p^2");
    else
      append("(" + pc.to_string() + ")*p^2");
  }
  const CoeffFn& f1 = terms_[1];
  if (!f1.is_zero()) {
    CoeffFn pc = f1.scaled(Complex(0.0, 1.0));
    append("(" + pc.to_string() + ")*p");
  }
  if (!terms_[0].is_zero()) append(terms_[0].to_string());
  if (out.empty()) out = "0";
  return out;
}

}  // namespace susy
