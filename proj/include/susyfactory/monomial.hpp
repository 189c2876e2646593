#ifndef SUSYFACTORY_MONOMIAL_HPP
#define SUSYFACTORY_MONOMIAL_HPP

#include <complex>
#include <string>
#include <vector>

namespace susy {

using Complex = std::complex<double>;

/// One term c * x^a * |x|^b * sign(x)^s. Canonical form keeps
/// b, s in {0,1} with b*s = 0 via the rewrites
///   |x|^2 -> x^2,  sign^2 -> 1,  x*sign -> |x|,  |x|*sign -> x,
///   |x|/x -> sign.
struct Monomial {
  Complex c{};
  int xpow = 0;   // may be negative (1/x, 1/x^2)
  int abspow = 0; // 0 or 1 after canonicalization
  int sgnpow = 0; // 0 or 1 after canonicalization

  void canonicalize();
  /// parity under x -> -x: true if the monomial is an even function
  bool even() const { return ((xpow + sgnpow) % 2) == 0; }
};

/// Coefficient function: canonical sum of monomials, merged by (a,b,s) key,
/// zero terms removed, sorted by (a,b,s).
class CoeffFn {
 public:
  CoeffFn() = default;
  explicit CoeffFn(Complex constant);
  explicit CoeffFn(std::vector<Monomial> terms);

  static CoeffFn x_power(int a, Complex c = 1.0);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Complex constant_part() const;  // coefficient of x^0|x|^0sign^0

  CoeffFn& operator+=(const CoeffFn& o);
  CoeffFn& operator-=(const CoeffFn& o);
  friend CoeffFn operator+(CoeffFn a, const CoeffFn& b) { return a += b; }
  friend CoeffFn operator-(CoeffFn a, const CoeffFn& b) { return a -= b; }
  friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
  CoeffFn operator-() const;
  CoeffFn scaled(Complex f) const;
  bool operator==(const CoeffFn& o) const;
  /// Same monomial structure with coefficients within a relative tolerance
  /// (absorbs the one-ulp reordering noise of equivalent evaluation routes).
  bool approx_equal(const CoeffFn& o, double rel_tol) const;

  /// d/dx with d|x|/dx = sign(x), d sign/dx = 0.
  CoeffFn derivative() const;
  /// Complex-conjugated coefficients (x treated as real).
  CoeffFn conjugated() const;
  /// Image under parity x -> -x (|x| fixed, sign flips, x^a gains (-1)^a).
  CoeffFn parity_image() const;
  /// Image under x -> -x, i -> -i (the PT map on coefficient functions).
  CoeffFn pt_image() const { return parity_image().conjugated(); }

  bool is_even_function() const;
  /// True if any monomial has a negative power of x.
  bool has_pole() const;
  /// True if any monomial carries |x| or sign(x).
  bool has_kink() const;
  int max_xpow() const;
  int min_xpow() const;

  /// Evaluate at a point. |x| and sign use the real part for complex x
  /// (contour points); exact for real x.
  Complex eval(Complex x) const;

  std::string to_string(const std::string& varname = "x") const;

 private:
  void normalize();
  std::vector<Monomial> terms_;
};

}  // namespace susy

#endif  // SUSYFACTORY_MONOMIAL_HPP
