#include "susyfactory/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "susyfactory/errors.hpp"

namespace susy {

ExprPtr ExprNode::num(Complex v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Num;
  n->value = v;
  return n;
}
ExprPtr ExprNode::var() {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Var;
  return n;
}
ExprPtr ExprNode::param(std::string nm) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Param;
  n->name = std::move(nm);
  return n;
}
static ExprPtr make1(NodeKind k, ExprPtr u) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = {std::move(u)};
  return n;
}
static ExprPtr make2(NodeKind k, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = {std::move(a), std::move(b)};
  return n;
}
ExprPtr ExprNode::neg(ExprPtr u) { return make1(NodeKind::Neg, std::move(u)); }
ExprPtr ExprNode::add(ExprPtr a, ExprPtr b) { return make2(NodeKind::Add, std::move(a), std::move(b)); }
ExprPtr ExprNode::sub(ExprPtr a, ExprPtr b) { return make2(NodeKind::Sub, std::move(a), std::move(b)); }
ExprPtr ExprNode::mul(ExprPtr a, ExprPtr b) { return make2(NodeKind::Mul, std::move(a), std::move(b)); }
ExprPtr ExprNode::div(ExprPtr a, ExprPtr b) { return make2(NodeKind::Div, std::move(a), std::move(b)); }
ExprPtr ExprNode::pow(ExprPtr base, long e) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Pow;
  n->args = {std::move(base)};
  n->exponent = e;
  return n;
}
ExprPtr ExprNode::nary(NodeKind k, std::vector<ExprPtr> parts) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = std::move(parts);
  return n;
}
ExprPtr ExprNode::abs(ExprPtr u) { return make1(NodeKind::Abs, std::move(u)); }
ExprPtr ExprNode::sign(ExprPtr u) { return make1(NodeKind::Sign, std::move(u)); }

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' intexp)?
//   primary:= number | 'i' | 'x' | ident | ident '(' expr ')' | '(' expr ')'
//            | '|' expr '|'
// ---------------------------------------------------------------------------
namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : src_(s) {}

  ExprPtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  bool in_bars_ = false;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = ExprNode::add(lhs, term());
      else if (accept('-'))
        lhs = ExprNode::sub(lhs, term());
      else
        return lhs;
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = ExprNode::mul(lhs, unary());
      else if (accept('/'))
        lhs = ExprNode::div(lhs, unary());
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return ExprNode::neg(unary());
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (accept('^')) return ExprNode::pow(base, intexp());
    return base;
  }

  long intexp() {
    skip_ws();
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected integer exponent", pos_);
    // a '.' here would make the exponent non-integer
    if (pos_ < src_.size() && src_[pos_] == '.')
      throw SyntaxError("non-integer exponent", pos_);
    long v = std::stol(src_.substr(start, pos_ - start));
    return negative ? -v : v;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (c == '|') {
      if (in_bars_) throw SyntaxError("nested |...| not supported", pos_);
      ++pos_;
      in_bars_ = true;
      auto e = expr();
      in_bars_ = false;
      expect('|');
      return ExprNode::abs(e);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw SyntaxError("unexpected character", pos_);
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
      ++pos_;
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = save;  // 'e' was an identifier start, not an exponent
      }
    }
    double v;
    try {
      v = std::stod(src_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw SyntaxError("malformed number", start);
    }
    return ExprNode::num(Complex(v, 0.0));
  }

  ExprPtr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name == "i") return ExprNode::num(Complex(0.0, 1.0));
    if (name == "x") return ExprNode::var();
    if (peek() == '(') {
      ++pos_;
      auto arg = expr();
      expect(')');
      if (name == "abs") return ExprNode::abs(arg);
      if (name == "sign") return ExprNode::sign(arg);
      throw SyntaxError("unknown function '" + name + "'", start);
    }
    return ExprNode::param(name);
  }
};

}  // namespace

SuperpotentialExpr parse(const std::string& text) { return {Parser(text).run()}; }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------
namespace {

std::string fmt_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << (v + 0.0);  // folds negative zero
  return os.str();
}

// precedence levels: Add/Sub = 1, Mul/Div = 2, Neg = 3, Pow = 4, atoms = 5
int prec(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
      return 2;
    case NodeKind::Neg:
      return 3;
    case NodeKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string print_node(const ExprPtr& e, int parent_prec) {
  std::string s;
  switch (e->kind) {
    case NodeKind::Num: {
      Complex v = e->value;
      if (v.imag() == 0.0) {
        s = fmt_real(v.real());
        if (v.real() < 0) s = "(" + s + ")";
      } else if (v.real() == 0.0) {
        if (v.imag() == 1.0)
          s = "i";
        else if (v.imag() == -1.0)
          s = "(-i)";
        else
          s = "(" + fmt_real(v.imag()) + "*i)";
      } else {
        s = "(" + fmt_real(v.real()) + "+" + fmt_real(v.imag()) + "*i)";
      }
      return s;
    }
    case NodeKind::Var:
      return "x";
    case NodeKind::Param:
      return e->name;
    case NodeKind::Neg:
      s = "-" + print_node(e->args[0], 3);
      break;
    case NodeKind::Add:
    case NodeKind::Sub: {
      const char* op = e->kind == NodeKind::Add ? " + " : " - ";
      if (e->args.size() == 2) {
        s = print_node(e->args[0], 1) + op + print_node(e->args[1], 2);
      } else {  // flattened n-ary Add
        s = print_node(e->args[0], 1);
        for (std::size_t k = 1; k < e->args.size(); ++k) s += " + " + print_node(e->args[k], 2);
      }
      break;
    }
    case NodeKind::Mul: {
      s = print_node(e->args[0], 2);
      for (std::size_t k = 1; k < e->args.size(); ++k) s += "*" + print_node(e->args[k], 3);
      break;
    }
    case NodeKind::Div:
      s = print_node(e->args[0], 2) + "/" + print_node(e->args[1], 3);
      break;
    case NodeKind::Pow:
      s = print_node(e->args[0], 5) + "^" + std::to_string(e->exponent);
      break;
    case NodeKind::Abs:
      return "abs(" + print_node(e->args[0], 0) + ")";
    case NodeKind::Sign:
      return "sign(" + print_node(e->args[0], 0) + ")";
  }
  if (prec(*e) < parent_prec) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string print(const SuperpotentialExpr& e) { return print_node(e.root, 0); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------
namespace {

Complex eval_node(const ExprPtr& e, Complex x, const ParamEnv& env) {
  switch (e->kind) {
    case NodeKind::Num:
      return e->value;
    case NodeKind::Var:
      return x;
    case NodeKind::Param: {
      auto it = env.find(e->name);
      if (it == env.end()) throw UnboundParameter("unbound parameter '" + e->name + "'");
      if (!std::isfinite(it->second))
        throw EvalDomainError("non-finite parameter '" + e->name + "'");
      return Complex(it->second, 0.0);
    }
    case NodeKind::Neg:
      return -eval_node(e->args[0], x, env);
    case NodeKind::Add: {
      Complex s = 0;
      for (const auto& a : e->args) s += eval_node(a, x, env);
      return s;
    }
    case NodeKind::Sub:
      return eval_node(e->args[0], x, env) - eval_node(e->args[1], x, env);
    case NodeKind::Mul: {
      Complex s = 1;
      for (const auto& a : e->args) s *= eval_node(a, x, env);
      return s;
    }
    case NodeKind::Div: {
      Complex d = eval_node(e->args[1], x, env);
      if (d == Complex(0.0, 0.0)) throw EvalDomainError("division by zero");
      return eval_node(e->args[0], x, env) / d;
    }
    case NodeKind::Pow: {
      Complex b = eval_node(e->args[0], x, env);
      long n = e->exponent;
      if (n < 0) {
        if (b == Complex(0.0, 0.0)) throw EvalDomainError("zero to negative power");
        b = Complex(1.0, 0.0) / b;
        n = -n;
      }
      Complex r = 1;
      while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
      }
      return r;
    }
    case NodeKind::Abs:
      // abs/sign act on the real part; arguments are real-coefficient
      // subexpressions of x by construction.
      return Complex(std::abs(eval_node(e->args[0], x, env).real()), 0.0);
    case NodeKind::Sign: {
      double re = eval_node(e->args[0], x, env).real();
      return Complex(re > 0 ? 1.0 : (re < 0 ? -1.0 : 0.0), 0.0);
    }
  }
  throw Error("unreachable");
}

}  // namespace

Complex eval(const SuperpotentialExpr& e, Complex x, const ParamEnv& env) {
  return eval_node(e.root, x, env);
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------
namespace {

ExprPtr diff_node(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Num:
    case NodeKind::Param:
      return ExprNode::num(0.0);
    case NodeKind::Var:
      return ExprNode::num(1.0);
    case NodeKind::Neg:
      return ExprNode::neg(diff_node(e->args[0]));
    case NodeKind::Add:
    case NodeKind::Sub: {
      std::vector<ExprPtr> parts;
      for (const auto& a : e->args) parts.push_back(diff_node(a));
      if (e->kind == NodeKind::Sub) return ExprNode::sub(parts[0], parts[1]);
      ExprPtr s = parts[0];
      for (std::size_t k = 1; k < parts.size(); ++k) s = ExprNode::add(s, parts[k]);
      return s;
    }
    case NodeKind::Mul: {
      // product rule over the (possibly flattened) factor list
      ExprPtr total;
      for (std::size_t k = 0; k < e->args.size(); ++k) {
        ExprPtr term = diff_node(e->args[k]);
        for (std::size_t j = 0; j < e->args.size(); ++j)
          if (j != k) term = ExprNode::mul(term, e->args[j]);
        total = total ? ExprNode::add(total, term) : term;
      }
      return total;
    }
    case NodeKind::Div: {
      const auto& u = e->args[0];
      const auto& v = e->args[1];
      return ExprNode::div(
          ExprNode::sub(ExprNode::mul(diff_node(u), v), ExprNode::mul(u, diff_node(v))),
          ExprNode::pow(v, 2));
    }
    case NodeKind::Pow: {
      const auto& u = e->args[0];
      long n = e->exponent;
      if (n == 0) return ExprNode::num(0.0);
      return ExprNode::mul(ExprNode::mul(ExprNode::num(Complex(double(n), 0.0)),
                                         ExprNode::pow(u, n - 1)),
                           diff_node(u));
    }
    case NodeKind::Abs:
      // d|u|/dx = sign(u) u'
      return ExprNode::mul(ExprNode::sign(e->args[0]), diff_node(e->args[0]));
    case NodeKind::Sign:
      // delta distribution dropped
      return ExprNode::num(0.0);
  }
  throw Error("unreachable");
}

}  // namespace

SuperpotentialExpr differentiate(const SuperpotentialExpr& e) { return {diff_node(e.root)}; }

// ---------------------------------------------------------------------------
// conj_reflect: W(x) -> W*(-x)
// ---------------------------------------------------------------------------
namespace {

ExprPtr conj_reflect_node(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Num:
      return ExprNode::num(std::conj(e->value));
    case NodeKind::Var:
      return ExprNode::neg(ExprNode::var());
    case NodeKind::Param:
      return e;  // parameters are real
    case NodeKind::Pow: {
      auto n = std::make_shared<ExprNode>();
      n->kind = NodeKind::Pow;
      n->args = {conj_reflect_node(e->args[0])};
      n->exponent = e->exponent;
      return n;
    }
    default: {
      auto n = std::make_shared<ExprNode>();
      n->kind = e->kind;
      n->exponent = e->exponent;
      for (const auto& a : e->args) n->args.push_back(conj_reflect_node(a));
      return n;
    }
  }
}

}  // namespace

SuperpotentialExpr conj_reflect(const SuperpotentialExpr& e) {
  return {conj_reflect_node(e.root)};
}

// ---------------------------------------------------------------------------
// Canonical form + structural equality
// ---------------------------------------------------------------------------
namespace {

std::string node_key(const ExprPtr& e);

// canonical Mul: flatten, fold numerics into a single leading coefficient,
// sort remaining factors; returns Num when everything folded
ExprPtr canon_mul(std::vector<ExprPtr> factors) {
  Complex coeff(1.0, 0.0);
  std::vector<ExprPtr> rest;
  for (auto& f : factors) {
    if (f->kind == NodeKind::Mul) {
      for (const auto& g : f->args) {
        if (g->kind == NodeKind::Num)
          coeff *= g->value;
        else
          rest.push_back(g);
      }
    } else if (f->kind == NodeKind::Num) {
      coeff *= f->value;
    } else {
      rest.push_back(f);
    }
  }
  if (coeff == Complex(0.0, 0.0)) return ExprNode::num(0.0);
  std::stable_sort(rest.begin(), rest.end(),
                   [](const ExprPtr& a, const ExprPtr& b) { return node_key(a) < node_key(b); });
  std::vector<ExprPtr> parts;
  if (coeff != Complex(1.0, 0.0) || rest.empty()) parts.push_back(ExprNode::num(coeff));
  parts.insert(parts.end(), rest.begin(), rest.end());
  if (parts.size() == 1) return parts[0];
  return ExprNode::nary(NodeKind::Mul, std::move(parts));
}

ExprPtr canon(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Num:
    case NodeKind::Var:
    case NodeKind::Param:
      return e;
    case NodeKind::Neg:
      return canon_mul({ExprNode::num(-1.0), canon(e->args[0])});
    case NodeKind::Sub:
      return canon(ExprNode::add(e->args[0], ExprNode::mul(ExprNode::num(-1.0), e->args[1])));
    case NodeKind::Add: {
      std::vector<ExprPtr> terms;
      Complex csum(0.0, 0.0);
      bool saw_num = false;
      for (const auto& a : e->args) {
        ExprPtr c = canon(a);
        if (c->kind == NodeKind::Add) {
          for (const auto& t : c->args) {
            if (t->kind == NodeKind::Num) {
              csum += t->value;
              saw_num = true;
            } else
              terms.push_back(t);
          }
        } else if (c->kind == NodeKind::Num) {
          csum += c->value;
          saw_num = true;
        } else
          terms.push_back(c);
      }
      if (saw_num && csum != Complex(0.0, 0.0)) terms.push_back(ExprNode::num(csum));
      if (terms.empty()) return ExprNode::num(csum);
      std::stable_sort(terms.begin(), terms.end(), [](const ExprPtr& a, const ExprPtr& b) {
        return node_key(a) < node_key(b);
      });
      if (terms.size() == 1) return terms[0];
      return ExprNode::nary(NodeKind::Add, std::move(terms));
    }
    case NodeKind::Mul: {
      std::vector<ExprPtr> parts;
      for (const auto& a : e->args) parts.push_back(canon(a));
      return canon_mul(std::move(parts));
    }
    case NodeKind::Div: {
      ExprPtr a = canon(e->args[0]);
      ExprPtr b = canon(e->args[1]);
      if (b->kind == NodeKind::Num) {
        if (b->value == Complex(0.0, 0.0)) return ExprNode::div(a, b);  // left as-is
        return canon_mul({ExprNode::num(Complex(1.0, 0.0) / b->value), a});
      }
      // Div(a, b) == a * b^-1 canonically
      return canon(ExprNode::mul(a, ExprNode::pow(b, -1)));
    }
    case NodeKind::Pow: {
      ExprPtr b = canon(e->args[0]);
      long n = e->exponent;
      if (n == 0) return ExprNode::num(1.0);
      if (n == 1) return b;
      if (b->kind == NodeKind::Num) {
        Complex v(1.0, 0.0);
        Complex base = b->value;
        long m = n;
        if (m < 0) {
          base = Complex(1.0, 0.0) / base;
          m = -m;
        }
        for (long k = 0; k < m; ++k) v *= base;
        return ExprNode::num(v);
      }
      if (b->kind == NodeKind::Mul) {  // pull numeric coefficient out
        std::vector<ExprPtr> rest;
        Complex coeff(1.0, 0.0);
        for (const auto& f : b->args) {
          if (f->kind == NodeKind::Num)
            coeff *= f->value;
          else
            rest.push_back(f);
        }
        if (coeff != Complex(1.0, 0.0)) {
          Complex cpow(1.0, 0.0);
          Complex base = coeff;
          long m = n;
          if (m < 0) {
            base = Complex(1.0, 0.0) / base;
            m = -m;
          }
          for (long k = 0; k < m; ++k) cpow *= base;
          ExprPtr inner = rest.size() == 1 ? rest[0] : ExprNode::nary(NodeKind::Mul, rest);
          return canon_mul({ExprNode::num(cpow), canon(ExprNode::pow(inner, n))});
        }
      }
      if (b->kind == NodeKind::Pow) return canon(ExprNode::pow(b->args[0], b->exponent * n));
      return ExprNode::pow(b, n);
    }
    case NodeKind::Abs: {
      ExprPtr u = canon(e->args[0]);
      if (u->kind == NodeKind::Num) return ExprNode::num(std::abs(u->value.real()));
      if (u->kind == NodeKind::Mul) {  // |c*u| = |c| * |u| for real c
        std::vector<ExprPtr> rest;
        Complex coeff(1.0, 0.0);
        for (const auto& f : u->args) {
          if (f->kind == NodeKind::Num)
            coeff *= f->value;
          else
            rest.push_back(f);
        }
        if (coeff != Complex(1.0, 0.0) && coeff.imag() == 0.0) {
          ExprPtr inner = rest.size() == 1 ? rest[0] : ExprNode::nary(NodeKind::Mul, rest);
          return canon_mul({ExprNode::num(std::abs(coeff.real())), ExprNode::abs(inner)});
        }
      }
      return ExprNode::abs(u);
    }
    case NodeKind::Sign: {
      ExprPtr u = canon(e->args[0]);
      if (u->kind == NodeKind::Num) {
        double r = u->value.real();
        return ExprNode::num(r > 0 ? 1.0 : (r < 0 ? -1.0 : 0.0));
      }
      if (u->kind == NodeKind::Mul) {
        std::vector<ExprPtr> rest;
        Complex coeff(1.0, 0.0);
        for (const auto& f : u->args) {
          if (f->kind == NodeKind::Num)
            coeff *= f->value;
          else
            rest.push_back(f);
        }
        if (coeff != Complex(1.0, 0.0) && coeff.imag() == 0.0 && coeff.real() != 0.0) {
          ExprPtr inner = rest.size() == 1 ? rest[0] : ExprNode::nary(NodeKind::Mul, rest);
          return canon_mul(
              {ExprNode::num(coeff.real() > 0 ? 1.0 : -1.0), ExprNode::sign(inner)});
        }
      }
      return ExprNode::sign(u);
    }
  }
  throw Error("unreachable");
}

std::string node_key(const ExprPtr& e) {
  std::ostringstream os;
  os.precision(17);
  switch (e->kind) {
    case NodeKind::Num:
      // + 0.0 folds negative zero into positive zero
      os << "N(" << e->value.real() + 0.0 << "," << e->value.imag() + 0.0 << ")";
      break;
    case NodeKind::Var:
      os << "x";
      break;
    case NodeKind::Param:
      os << "P(" << e->name << ")";
      break;
    case NodeKind::Pow:
      os << "^(" << node_key(e->args[0]) << "," << e->exponent << ")";
      break;
    default: {
      static const char* tag[] = {"Num", "Var", "Par", "Neg", "Add", "Sub",
                                  "Mul", "Div", "Pow", "Abs", "Sgn"};
      os << tag[static_cast<int>(e->kind)] << "(";
      for (const auto& a : e->args) os << node_key(a) << ",";
      os << ")";
    }
  }
  return os.str();
}

}  // namespace

ExprPtr canonical(const ExprPtr& e) { return canon(e); }

bool equal(const SuperpotentialExpr& a, const SuperpotentialExpr& b) {
  return node_key(canon(a.root)) == node_key(canon(b.root));
}

bool is_pt_invariant(const SuperpotentialExpr& e, const ParamEnv& env) {
  // Structural equality decides parameter-free invariance; bound parameter
  // values can also make W*(-x) - W vanish identically (e.g. g = 0), so a
  // structural mismatch still defers to the numeric samples.
  SuperpotentialExpr r = conj_reflect(e);
  bool structural = equal(e, r);
  int confirmed = 0;
  for (int k = 1; confirmed < (structural ? 16 : 48) && k < 400; ++k) {
    double x = 0.31 * k * (k % 2 ? 1 : -1) + 0.07;
    try {
      Complex a = eval(e, Complex(x, 0.0), env);
      Complex b = eval(r, Complex(x, 0.0), env);
      double scale = std::max(1.0, std::abs(a));
      if (std::abs(a - b) > 1e-10 * scale) return false;
      ++confirmed;
    } catch (const EvalDomainError&) {
      continue;  // pole; try the next point
    }
  }
  return confirmed >= 16;
}

}  // namespace susy
