#include "susyfactory/generators.hpp"

#include <cmath>

#include "susyfactory/errors.hpp"

namespace susy {

namespace {

// Lower an AST into a monomial sum; every node must stay within the monomial
// algebra over x, 1/x, |x|, sign(x).
CoeffFn lower_node(const ExprPtr& e, const ParamEnv& env) {
  switch (e->kind) {
    case NodeKind::Num:
      return CoeffFn(e->value);
    case NodeKind::Var:
      return CoeffFn::x_power(1);
    case NodeKind::Param: {
      auto it = env.find(e->name);
      if (it == env.end()) throw UnboundParameter("unbound parameter '" + e->name + "'");
      return CoeffFn(Complex(it->second, 0.0));
    }
    case NodeKind::Neg:
      return -lower_node(e->args[0], env);
    case NodeKind::Add: {
      CoeffFn s;
      for (const auto& a : e->args) s += lower_node(a, env);
      return s;
    }
    case NodeKind::Sub:
      return lower_node(e->args[0], env) - lower_node(e->args[1], env);
    case NodeKind::Mul: {
      CoeffFn s(Complex(1.0, 0.0));
      for (const auto& a : e->args) s = s * lower_node(a, env);
      return s;
    }
    case NodeKind::Div: {
      CoeffFn num = lower_node(e->args[0], env);
      CoeffFn den = lower_node(e->args[1], env);
      if (den.terms().size() != 1)
        throw NonMonomial("division only by a single monomial (got '" +
                          den.to_string() + "')");
      const Monomial& d = den.terms()[0];
      std::vector<Monomial> out;
      for (const auto& m : num.terms())
        out.push_back({m.c / d.c, m.xpow - d.xpow, m.abspow - d.abspow, m.sgnpow - d.sgnpow});
      return CoeffFn(std::move(out));
    }
    case NodeKind::Pow: {
      CoeffFn base = lower_node(e->args[0], env);
      long n = e->exponent;
      if (n < 0) {
        if (base.terms().size() != 1)
          throw NonMonomial("negative power of a non-monomial");
        const Monomial& m = base.terms()[0];
        base = CoeffFn({{Complex(1.0, 0.0) / m.c, -m.xpow, -m.abspow, -m.sgnpow}});
        n = -n;
      }
      CoeffFn r(Complex(1.0, 0.0));
      for (long k = 0; k < n; ++k) r = r * base;
      return r;
    }
    case NodeKind::Abs: {
      CoeffFn u = lower_node(e->args[0], env);
      if (u.is_zero()) return u;
      if (u.terms().size() != 1) throw NonMonomial("abs of a non-monomial");
      const Monomial& m = u.terms()[0];
      if (m.c.imag() != 0.0) throw NonMonomial("abs of a complex-coefficient expression");
      // |c x^a |x|^b sign^s| = |c| |x|^(a+b)
      return CoeffFn({{Complex(std::abs(m.c.real()), 0.0), 0, m.xpow + m.abspow, 0}});
    }
    case NodeKind::Sign: {
      CoeffFn u = lower_node(e->args[0], env);
      if (u.is_zero()) return u;
      if (u.terms().size() != 1) throw NonMonomial("sign of a non-monomial");
      const Monomial& m = u.terms()[0];
      if (m.c.imag() != 0.0) throw NonMonomial("sign of a complex-coefficient expression");
      double cs = m.c.real() > 0 ? 1.0 : -1.0;
      return CoeffFn({{Complex(cs, 0.0), 0, 0, m.xpow + m.sgnpow}});
    }
  }
  throw Error("unreachable");
}

}  // namespace

CoeffFn lower(const SuperpotentialExpr& expr, const ParamEnv& env) {
  return lower_node(expr.root, env);
}

GeneratorPair make_generators(const CoeffFn& w, Convention conv) {
  GeneratorPair g;
  g.convention = conv;
  const Complex I(0.0, 1.0);
  CoeffFn w_cr = w.parity_image().conjugated();  // W*(-x)
  switch (conv) {
    case Convention::TypeI:
      // A = -D + iW ; B = D + iW*(-x)
      g.w1 = w.scaled(I);
      g.w2 = w_cr.scaled(I);
      g.A = DiffOperator::term(CoeffFn(Complex(-1.0, 0.0)), 1) + DiffOperator::coefficient(g.w1);
      g.B = DiffOperator::derivative(1) + DiffOperator::coefficient(g.w2);
      break;
    case Convention::TypeIII:
      // A = iD + W ; B = iD + W*(-x)
      g.w1 = w;
      g.w2 = w_cr;
      g.A = DiffOperator::term(CoeffFn(I), 1) + DiffOperator::coefficient(w);
      g.B = DiffOperator::term(CoeffFn(I), 1) + DiffOperator::coefficient(w_cr);
      break;
    case Convention::TypeII:
      throw InputError("TypeII requires two superpotentials");
  }
  return g;
}

GeneratorPair make_generators(const SuperpotentialExpr& w, Convention conv,
                              const ParamEnv& env) {
  return make_generators(lower(w, env), conv);
}

GeneratorPair make_generators(const CoeffFn& w1, const CoeffFn& w2) {
  if (!(w1 * w2).is_even_function())
    throw EvenProductViolation("W1*W2 must be an even function of x");
  GeneratorPair g;
  g.convention = Convention::TypeII;
  g.w1 = w1;
  g.w2 = w2;
  // A = -ip - W1 = -D - W1 ; B = ip - W2 = D - W2
  g.A = DiffOperator::term(CoeffFn(Complex(-1.0, 0.0)), 1) + DiffOperator::coefficient(-w1);
  g.B = DiffOperator::derivative(1) + DiffOperator::coefficient(-w2);
  return g;
}

GeneratorPair make_generators(const SuperpotentialExpr& w1, const SuperpotentialExpr& w2,
                              const ParamEnv& env) {
  return make_generators(lower(w1, env), lower(w2, env));
}

std::pair<DiffOperator, DiffOperator> closed_form_pair(const GeneratorPair& gen) {
  const Complex I(0.0, 1.0);
  DiffOperator p2 = DiffOperator::momentum_squared();
  DiffOperator hp, hm;
  switch (gen.convention) {
    case Convention::TypeI: {
      // H+ = p^2 - [W - W*(-x)]p - i dW*(-x)/dx - W W*(-x)
      // H- = p^2 - [W - W*(-x)]p + i dW/dx     - W W*(-x)
      CoeffFn W = gen.w1.scaled(-I);    // w1 = iW
      CoeffFn Wr = gen.w2.scaled(-I);   // w2 = iW*(-x)
      CoeffFn pcoef = -(W - Wr);        // multiplies p; D-coeff = i*pcoef... p = -iD
      // term c(x) p = c(x) * (-i) D
      DiffOperator pterm = DiffOperator::term(pcoef.scaled(Complex(0.0, -1.0)), 1);
      CoeffFn common = -(W * Wr);
      hp = p2 + pterm + DiffOperator::coefficient(common - Wr.derivative().scaled(I));
      hm = p2 + pterm + DiffOperator::coefficient(common + W.derivative().scaled(I));
      break;
    }
    case Convention::TypeII: {
      // H+ = p^2 + i[W2 - W1]p + dW2/dx + W1 W2
      // H- = p^2 + i[W2 - W1]p - dW1/dx + W1 W2
      CoeffFn pcoef = (gen.w2 - gen.w1).scaled(I);
      DiffOperator pterm = DiffOperator::term(pcoef.scaled(Complex(0.0, -1.0)), 1);
      CoeffFn prod = gen.w1 * gen.w2;
      hp = p2 + pterm + DiffOperator::coefficient(prod + gen.w2.derivative());
      hm = p2 + pterm + DiffOperator::coefficient(prod - gen.w1.derivative());
      break;
    }
    case Convention::TypeIII: {
      // H+ = p^2 - [W + W*(-x)]p + i dW*(-x)/dx + W W*(-x)
      // H- = p^2 - [W + W*(-x)]p + i dW/dx      + W W*(-x)
      CoeffFn pcoef = -(gen.w1 + gen.w2);
      DiffOperator pterm = DiffOperator::term(pcoef.scaled(Complex(0.0, -1.0)), 1);
      CoeffFn prod = gen.w1 * gen.w2;
      hp = p2 + pterm + DiffOperator::coefficient(prod + gen.w2.derivative().scaled(I));
      hm = p2 + pterm + DiffOperator::coefficient(prod + gen.w1.derivative().scaled(I));
      break;
    }
  }
  return {hp, hm};
}

HamiltonianPair hamiltonian_pair(const GeneratorPair& gen) {
  HamiltonianPair h;
  h.h_plus = multiply(gen.A, gen.B);
  h.h_minus = multiply(gen.B, gen.A);
  auto [cp, cm] = closed_form_pair(gen);
  bool agree = true;
  for (int m = 0; m < 3; ++m) {
    agree = agree && h.h_plus.coeff(m).approx_equal(cp.coeff(m), 1e-12);
    agree = agree && h.h_minus.coeff(m).approx_equal(cm.coeff(m), 1e-12);
  }
  if (!agree) throw Error("hamiltonian_pair: product route disagrees with closed form");
  h.sym_plus = classify(h.h_plus);
  h.sym_minus = classify(h.h_minus);
  h.trivial = (h.h_plus == h.h_minus);
  return h;
}

}  // namespace susy
