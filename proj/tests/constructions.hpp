// The nine explicitly printed operator constructions, as data shared by the
// unit tests and the acceptance suite.
#ifndef SUSY_TESTS_CONSTRUCTIONS_HPP
#define SUSY_TESTS_CONSTRUCTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "susyfactory/generators.hpp"

namespace susy_tests {

using namespace susy;

struct OpTerm {
  Complex c;
  int a = 0, b = 0, s = 0;
  int order = 0;
};

inline DiffOperator make_op(std::initializer_list<OpTerm> terms) {
  DiffOperator out;
  for (const auto& t : terms) {
    CoeffFn f({{t.c, t.a, t.b, t.s}});
    out.set_coeff(t.order, out.coeff(t.order) + f);
  }
  return out;
}

struct Construction {
  std::string label;
  std::function<HamiltonianPair()> build;
  DiffOperator expect_plus;
  DiffOperator expect_minus;
};

inline std::vector<Construction> printed_constructions() {
  const Complex I(0.0, 1.0);
  std::vector<Construction> v;

  v.push_back({"harmonic pair (W = ix)",
               [] { return hamiltonian_pair(make_generators(parse("i*x"), Convention::TypeI)); },
               make_op({{-1.0, 0, 0, 0, 2}, {1.0, 2, 0, 0, 0}, {1.0, 0, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2}, {1.0, 2, 0, 0, 0}, {-1.0, 0, 0, 0, 0}})});

  const double gv = 0.7;
  v.push_back(
      {"shifted momentum pair (W = ix - ig)",
       [] {
         return hamiltonian_pair(
             make_generators(parse("i*x - i*g"), Convention::TypeI, {{"g", 0.7}}));
       },
       make_op({{-1.0, 0, 0, 0, 2},
                {2 * gv, 0, 0, 0, 1},
                {1.0, 2, 0, 0, 0},
                {-gv * gv + 1.0, 0, 0, 0, 0}}),
       make_op({{-1.0, 0, 0, 0, 2},
                {2 * gv, 0, 0, 0, 1},
                {1.0, 2, 0, 0, 0},
                {-gv * gv - 1.0, 0, 0, 0, 0}})});

  v.push_back({"sextic pair (W = ikx^3 - igx^2, k = g = 1)",
               [] {
                 return hamiltonian_pair(make_generators(parse("i*k*x^3 - i*g*x^2"),
                                                         Convention::TypeI,
                                                         {{"k", 1.0}, {"g", 1.0}}));
               },
               make_op({{-1.0, 0, 0, 0, 2},
                        {2.0, 2, 0, 0, 1},
                        {3.0, 2, 0, 0, 0},
                        {2.0, 1, 0, 0, 0},
                        {-1.0, 4, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2},
                        {2.0, 2, 0, 0, 1},
                        {-3.0, 2, 0, 0, 0},
                        {2.0, 1, 0, 0, 0},
                        {-1.0, 4, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}})});

  v.push_back({"inverted quartic pair (W = x^2), +- up to relabeling",
               [] { return hamiltonian_pair(make_generators(parse("x^2"), Convention::TypeI)); },
               make_op({{-1.0, 0, 0, 0, 2}, {-1.0, 4, 0, 0, 0}, {-2.0 * I, 1, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2}, {-1.0, 4, 0, 0, 0}, {2.0 * I, 1, 0, 0, 0}})});

  auto scaled_radial = [](bool iie) {
    return [iie] {
      HamiltonianPair h = hamiltonian_pair(make_generators(
          parse(iie ? "i*x + i*lam/x" : "i*x - i*lam/x"), Convention::TypeI, {{"lam", 3.0}}));
      h.h_plus = scale(h.h_plus, 0.5);
      h.h_minus = scale(h.h_minus, 0.5);
      return h;
    };
  };
  v.push_back({"radial susy pair (W = ix - i lam/x, lam = 3, scaled 1/2)", scaled_radial(false),
               make_op({{-0.5, 0, 0, 0, 2}, {0.5, 2, 0, 0, 0}, {6.0, -2, 0, 0, 0},
                        {-2.5, 0, 0, 0, 0}}),
               make_op({{-0.5, 0, 0, 0, 2}, {0.5, 2, 0, 0, 0}, {3.0, -2, 0, 0, 0},
                        {-3.5, 0, 0, 0, 0}})});
  v.push_back({"radial iso pair (W = ix + i lam/x, lam = 3, scaled 1/2)", scaled_radial(true),
               make_op({{-0.5, 0, 0, 0, 2}, {0.5, 2, 0, 0, 0}, {3.0, -2, 0, 0, 0},
                        {3.5, 0, 0, 0, 0}}),
               make_op({{-0.5, 0, 0, 0, 2}, {0.5, 2, 0, 0, 0}, {6.0, -2, 0, 0, 0},
                        {2.5, 0, 0, 0, 0}})});

  v.push_back({"twin pair A (W1 = x, W2 = x^3)",
               [] { return hamiltonian_pair(make_generators(parse("x"), parse("x^3"))); },
               make_op({{-1.0, 0, 0, 0, 2},
                        {1.0, 3, 0, 0, 1},
                        {-1.0, 1, 0, 0, 1},
                        {3.0, 2, 0, 0, 0},
                        {1.0, 4, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2},
                        {1.0, 3, 0, 0, 1},
                        {-1.0, 1, 0, 0, 1},
                        {-1.0, 0, 0, 0, 0},
                        {1.0, 4, 0, 0, 0}})});
  v.push_back({"twin pair B (W1 = x^3, W2 = x)",
               [] { return hamiltonian_pair(make_generators(parse("x^3"), parse("x"))); },
               make_op({{-1.0, 0, 0, 0, 2},
                        {-1.0, 3, 0, 0, 1},
                        {1.0, 1, 0, 0, 1},
                        {1.0, 0, 0, 0, 0},
                        {1.0, 4, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2},
                        {-1.0, 3, 0, 0, 1},
                        {1.0, 1, 0, 0, 1},
                        {-3.0, 2, 0, 0, 0},
                        {1.0, 4, 0, 0, 0}})});

  v.push_back({"quadruplet pair A (W1 = x^2, W2 = x^4)",
               [] { return hamiltonian_pair(make_generators(parse("x^2"), parse("x^4"))); },
               make_op({{-1.0, 0, 0, 0, 2},
                        {1.0, 4, 0, 0, 1},
                        {-1.0, 2, 0, 0, 1},
                        {4.0, 3, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2},
                        {1.0, 4, 0, 0, 1},
                        {-1.0, 2, 0, 0, 1},
                        {-2.0, 1, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}})});
  v.push_back({"quadruplet pair B (W1 = x^4, W2 = x^2)",
               [] { return hamiltonian_pair(make_generators(parse("x^4"), parse("x^2"))); },
               make_op({{-1.0, 0, 0, 0, 2},
                        {-1.0, 4, 0, 0, 1},
                        {1.0, 2, 0, 0, 1},
                        {2.0, 1, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2},
                        {-1.0, 4, 0, 0, 1},
                        {1.0, 2, 0, 0, 1},
                        {-4.0, 3, 0, 0, 0},
                        {1.0, 6, 0, 0, 0}})});

  v.push_back({"absolute value pair (W = i x |x|)",
               [] {
                 return hamiltonian_pair(
                     make_generators(parse("i*x*abs(x)"), Convention::TypeI));
               },
               make_op({{-1.0, 0, 0, 0, 2}, {2.0, 0, 1, 0, 0}, {1.0, 4, 0, 0, 0}}),
               make_op({{-1.0, 0, 0, 0, 2}, {-2.0, 0, 1, 0, 0}, {1.0, 4, 0, 0, 0}})});

  return v;
}

}  // namespace susy_tests

#endif  // SUSY_TESTS_CONSTRUCTIONS_HPP
