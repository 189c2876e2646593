#ifndef SUSYFACTORY_GENERATORS_HPP
#define SUSYFACTORY_GENERATORS_HPP

#include <optional>

#include "susyfactory/diff_operator.hpp"
#include "susyfactory/expr.hpp"

namespace susy {

/// Generator conventions:
///   TypeI   : A = -d/dx + iW(x),  B = d/dx + iW*(-x)
///   TypeII  : A = -ip - W1,       B = ip - W2   (W1*W2 must be even)
///   TypeIII : A = i d/dx + W(x),  B = i d/dx + W*(-x)
enum class Convention { TypeI, TypeII, TypeIII };

/// Lower a parsed superpotential to a canonical coefficient function,
/// substituting parameter values. Throws NonMonomial for structure that is
/// not a sum of monomials in x, 1/x, |x|, sign(x).
CoeffFn lower(const SuperpotentialExpr& expr, const ParamEnv& env = {});

struct GeneratorPair {
  DiffOperator A;
  DiffOperator B;
  Convention convention{};
  CoeffFn w1;  // iW for TypeI/TypeIII; W1 for TypeII
  CoeffFn w2;  // iW*(-x) for TypeI/TypeIII; W2 for TypeII
};

/// Build A, B from one superpotential (TypeI/TypeIII).
GeneratorPair make_generators(const SuperpotentialExpr& w, Convention conv,
                              const ParamEnv& env = {});
GeneratorPair make_generators(const CoeffFn& w, Convention conv);

/// Build A, B from two superpotentials (TypeII). Throws EvenProductViolation
/// when W1*W2 is not an even function.
GeneratorPair make_generators(const SuperpotentialExpr& w1, const SuperpotentialExpr& w2,
                              const ParamEnv& env = {});
GeneratorPair make_generators(const CoeffFn& w1, const CoeffFn& w2);

struct HamiltonianPair {
  DiffOperator h_plus;   // AB
  DiffOperator h_minus;  // BA
  Symmetry sym_plus;
  Symmetry sym_minus;
  bool trivial = false;  // W = 0 degenerate pair
};

/// H+ = AB, H- = BA via operator multiplication, cross-validated against the
/// convention's closed form; both routes must agree monomial-for-monomial.
HamiltonianPair hamiltonian_pair(const GeneratorPair& gen);

/// The closed forms alone (the independent route used for validation).
std::pair<DiffOperator, DiffOperator> closed_form_pair(const GeneratorPair& gen);

}  // namespace susy

#endif  // SUSYFACTORY_GENERATORS_HPP
