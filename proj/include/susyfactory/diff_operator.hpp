#ifndef SUSYFACTORY_DIFF_OPERATOR_HPP
#define SUSYFACTORY_DIFF_OPERATOR_HPP

#include <array>
#include <string>

#include "susyfactory/monomial.hpp"

namespace susy {

/// Differential operator sum_m f_m(x) D^m, m <= 2, stored left-normal
/// (all coefficient functions to the left of all derivatives).
/// p = -i d/dx enters as D = i p, p^2 = -D^2.
class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator coefficient(CoeffFn f);       // f(x) * D^0
  static DiffOperator term(CoeffFn f, int order);   // f(x) * D^order
  static DiffOperator derivative(int order = 1);    // D^order
  static DiffOperator momentum_squared();           // p^2 = -D^2

  const CoeffFn& coeff(int order) const { return terms_.at(order); }
  void set_coeff(int order, CoeffFn f);
  int order() const;
  bool is_zero() const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  bool operator==(const DiffOperator& o) const;
  bool approx_equal(const DiffOperator& o, double rel_tol) const;

  /// All coefficients multiplied by a scalar.
  DiffOperator scaled(Complex f) const;

  /// Formal adjoint: (f D^m)^dagger = (-1)^m sum_l C(m,l) conj(f)^(l) D^(m-l).
  DiffOperator adjoint() const;
  /// Image under x -> -x, i -> -i.
  DiffOperator pt_image() const;

  bool is_hermitian() const { return *this == adjoint(); }
  bool is_pt_symmetric() const { return *this == pt_image(); }

  /// Rendered in p-form, e.g. "p^2 + 2i*x^2*p - 3x^2 + ...".
  std::string to_string() const;

 private:
  std::array<CoeffFn, 3> terms_{};
};

/// Leibniz product (f D^j)(g D^k) = sum_l C(j,l) f g^(l) D^(j+k-l).
/// Throws OrderOverflow if the combined order exceeds 2.
DiffOperator multiply(const DiffOperator& left, const DiffOperator& right);

/// Overall scalar rescaling, e.g. the 1/2 of the radial convention.
DiffOperator scale(const DiffOperator& h, double factor);

enum class SymmetryTag { hermitian, pt_symmetric, neither };

struct Symmetry {
  bool hermitian = false;
  bool pt_symmetric = false;
  SymmetryTag primary() const {
    if (hermitian) return SymmetryTag::hermitian;
    if (pt_symmetric) return SymmetryTag::pt_symmetric;
    return SymmetryTag::neither;
  }
};

Symmetry classify(const DiffOperator& h);
std::string to_string(SymmetryTag t);

}  // namespace susy

#endif  // SUSYFACTORY_DIFF_OPERATOR_HPP
