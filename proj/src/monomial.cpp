#include "susyfactory/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "susyfactory/errors.hpp"

namespace susy {

void Monomial::canonicalize() {
  // Normal forms: x^a ; x^a*|x| (a >= 0) ; sign(x)*x^a (a <= 0).
  for (;;) {
    if (abspow >= 2) {  // |x|^2 -> x^2
      abspow -= 2;
      xpow += 2;
      continue;
    }
    if (abspow <= -1) {  // 1/|x| -> sign/x
      abspow += 1;
      xpow -= 1;
      sgnpow += 1;
      continue;
    }
    if (sgnpow >= 2 || sgnpow < 0) {  // sign^2 -> 1
      sgnpow = ((sgnpow % 2) + 2) % 2;
      continue;
    }
    if (abspow == 1 && sgnpow == 1) {  // |x|*sign -> x
      abspow = 0;
      sgnpow = 0;
      xpow += 1;
      continue;
    }
    if (abspow == 1 && xpow <= -1) {  // |x|/x -> sign
      abspow = 0;
      xpow += 1;
      sgnpow += 1;
      continue;
    }
    if (sgnpow == 1 && xpow >= 1) {  // x*sign -> |x|
      xpow -= 1;
      abspow = 1;
      sgnpow = 0;
      continue;
    }
    break;
  }
}

CoeffFn::CoeffFn(Complex constant) {
  if (constant != Complex(0.0, 0.0)) terms_.push_back({constant, 0, 0, 0});
}

CoeffFn::CoeffFn(std::vector<Monomial> terms) : terms_(std::move(terms)) { normalize(); }

CoeffFn CoeffFn::x_power(int a, Complex c) {
  CoeffFn f;
  if (c != Complex(0.0, 0.0)) {
    f.terms_.push_back({c, a, 0, 0});
    f.normalize();
  }
  return f;
}

bool CoeffFn::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].xpow == 0 && terms_[0].abspow == 0 &&
          terms_[0].sgnpow == 0);
}

Complex CoeffFn::constant_part() const {
  for (const auto& m : terms_)
    if (m.xpow == 0 && m.abspow == 0 && m.sgnpow == 0) return m.c;
  return {0.0, 0.0};
}

void CoeffFn::normalize() {
  for (auto& m : terms_) m.canonicalize();
  std::stable_sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
    return std::tie(a.xpow, a.abspow, a.sgnpow) < std::tie(b.xpow, b.abspow, b.sgnpow);
  });
  std::vector<Monomial> merged;
  for (const auto& m : terms_) {
    if (!merged.empty() && merged.back().xpow == m.xpow && merged.back().abspow == m.abspow &&
        merged.back().sgnpow == m.sgnpow)
      merged.back().c += m.c;
    else
      merged.push_back(m);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Monomial& m) { return m.c == Complex(0.0, 0.0); }),
               merged.end());
  terms_ = std::move(merged);
}

CoeffFn& CoeffFn::operator+=(const CoeffFn& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

CoeffFn& CoeffFn::operator-=(const CoeffFn& o) {
  for (const auto& m : o.terms_) terms_.push_back({-m.c, m.xpow, m.abspow, m.sgnpow});
  normalize();
  return *this;
}

CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& p : a.terms_)
    for (const auto& q : b.terms_)
      out.push_back({p.c * q.c, p.xpow + q.xpow, p.abspow + q.abspow, p.sgnpow + q.sgnpow});
  return CoeffFn(std::move(out));
}

CoeffFn CoeffFn::operator-() const {
  CoeffFn r = *this;
  for (auto& m : r.terms_) m.c = -m.c;
  return r;
}

CoeffFn CoeffFn::scaled(Complex f) const {
  CoeffFn r = *this;
  for (auto& m : r.terms_) m.c *= f;
  r.normalize();
  return r;
}

bool CoeffFn::operator==(const CoeffFn& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& a = terms_[k];
    const auto& b = o.terms_[k];
    if (a.xpow != b.xpow || a.abspow != b.abspow || a.sgnpow != b.sgnpow || a.c != b.c)
      return false;
  }
  return true;
}

bool CoeffFn::approx_equal(const CoeffFn& o, double rel_tol) const {
  double scale = 1.0;
  for (const auto& m : terms_) scale = std::max(scale, std::abs(m.c));
  for (const auto& m : o.terms_) scale = std::max(scale, std::abs(m.c));
  const double tol = rel_tol * scale;
  std::size_t i = 0, j = 0;
  auto key = [](const Monomial& m) { return std::tie(m.xpow, m.abspow, m.sgnpow); };
  while (i < terms_.size() || j < o.terms_.size()) {
    if (i < terms_.size() && j < o.terms_.size() && key(terms_[i]) == key(o.terms_[j])) {
      if (std::abs(terms_[i].c - o.terms_[j].c) > tol) return false;
      ++i;
      ++j;
    } else if (j >= o.terms_.size() ||
               (i < terms_.size() && key(terms_[i]) < key(o.terms_[j]))) {
      if (std::abs(terms_[i].c) > tol) return false;
      ++i;
    } else {
      if (std::abs(o.terms_[j].c) > tol) return false;
      ++j;
    }
  }
  return true;
}

CoeffFn CoeffFn::derivative() const {
  std::vector<Monomial> out;
  for (const auto& m : terms_) {
    if (m.xpow != 0)
      out.push_back({m.c * double(m.xpow), m.xpow - 1, m.abspow, m.sgnpow});
    if (m.abspow != 0)  // d|x|^b = b |x|^{b-1} sign
      out.push_back({m.c * double(m.abspow), m.xpow, m.abspow - 1, m.sgnpow + 1});
    // d sign/dx = 0 (delta dropped)
  }
  return CoeffFn(std::move(out));
}

CoeffFn CoeffFn::conjugated() const {
  CoeffFn r = *this;
  for (auto& m : r.terms_) m.c = std::conj(m.c);
  return r;
}

CoeffFn CoeffFn::parity_image() const {
  CoeffFn r = *this;
  for (auto& m : r.terms_)
    if ((m.xpow + m.sgnpow) % 2 != 0) m.c = -m.c;
  return r;
}

bool CoeffFn::is_even_function() const {
  for (const auto& m : terms_)
    if (!m.even()) return false;
  return true;
}

bool CoeffFn::has_pole() const {
  for (const auto& m : terms_)
    if (m.xpow < 0) return true;
  return false;
}

bool CoeffFn::has_kink() const {
  for (const auto& m : terms_)
    if (m.abspow != 0 || m.sgnpow != 0) return true;
  return false;
}

int CoeffFn::max_xpow() const {
  int v = 0;
  for (const auto& m : terms_) v = std::max(v, m.xpow + m.abspow);
  return v;
}

int CoeffFn::min_xpow() const {
  int v = 0;
  for (const auto& m : terms_) v = std::min(v, m.xpow);
  return v;
}

Complex CoeffFn::eval(Complex x) const {
  Complex s(0.0, 0.0);
  for (const auto& m : terms_) {
    Complex v = m.c;
    if (m.xpow != 0) {
      if (x == Complex(0.0, 0.0) && m.xpow < 0) throw EvalDomainError("pole at x = 0");
      Complex b = m.xpow > 0 ? x : Complex(1.0, 0.0) / x;
      for (int k = 0; k < std::abs(m.xpow); ++k) v *= b;
    }
    if (m.abspow != 0) {
      double ax = std::abs(x.real());
      for (int k = 0; k < m.abspow; ++k) v *= ax;
    }
    if (m.sgnpow != 0) {
      double re = x.real();
      v *= (re > 0 ? 1.0 : (re < 0 ? -1.0 : 0.0));
    }
    s += v;
  }
  return s;
}

namespace {

std::string fmt_coeff(Complex c, bool leading) {
  std::ostringstream os;
  os.precision(12);
  double re = c.real(), im = c.imag();
  auto sgn = [&](double v) { return v < 0 ? " - " : (leading ? "" : " + "); };
  if (im == 0.0) {
    os << sgn(re) << std::abs(re);
  } else if (re == 0.0) {
    os << sgn(im);
    if (std::abs(im) != 1.0) os << std::abs(im) << "*";
    os << "i";
  } else {
    os << (leading ? "" : " + ") << "(" << re << (im < 0 ? "-" : "+") << std::abs(im) << "*i)";
  }
  return os.str();
}

}  // namespace

std::string CoeffFn::to_string(const std::string& varname) const {
  if (terms_.empty()) return "0";
  // print descending total degree for readability
  auto sorted = terms_;
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    return a.xpow + a.abspow > b.xpow + b.abspow;
  });
  std::string out;
  bool first = true;
  for (const auto& m : sorted) {
    std::string body;
    if (m.xpow == 1)
      body = varname;
    else if (m.xpow != 0)
      body = varname + "^" + std::to_string(m.xpow);
    if (m.abspow == 1) body += (body.empty() ? "" : "*") + ("|" + varname + "|");
    if (m.sgnpow == 1) body += (body.empty() ? "" : "*") + ("sign(" + varname + ")");
    bool unit = (m.c == Complex(1.0, 0.0) || m.c == Complex(-1.0, 0.0)) && !body.empty();
    if (unit) {
      out += (m.c.real() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ")) + body;
    } else {
      out += fmt_coeff(m.c, first);
      if (!body.empty()) out += "*" + body;
    }
    first = false;
  }
  return out;
}

}  // namespace susy
