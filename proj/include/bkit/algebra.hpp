#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bkit/rational.hpp"
#include "bkit/report.hpp"

namespace bkit {

// A word in the universal enveloping algebra: generator names, left to right.
using Word = std::vector<std::string>;

// Finite rational combination of enveloping-algebra words. Zero coefficients
// are never stored, so equality is map equality.
struct EnvElement {
  std::map<Word, Rat> terms;

  static EnvElement zero();
  static EnvElement unit(const Rat& scalar = Rat(1));
  static EnvElement gen(const std::string& name);

  EnvElement& add_term(const Word& word, const Rat& coeff);
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

EnvElement operator+(const EnvElement&, const EnvElement&);
EnvElement operator-(const EnvElement&, const EnvElement&);
EnvElement operator*(const EnvElement&, const EnvElement&);  // word concatenation
EnvElement operator*(const Rat&, const EnvElement&);
bool operator==(const EnvElement&, const EnvElement&);

// A finite-dimensional Lie algebra presented by structure constants over an
// ordered basis. brackets stores [e_i, e_j] for i < j only; mirrored entries
// follow by antisymmetry, diagonal entries vanish, absent entries are zero.
struct LieAlgebraSpec {
  std::string name;
  std::vector<std::string> basis;
  std::map<std::pair<int, int>, EnvElement> brackets;
  std::set<std::string> central;  // generators represented by scalars

  int index_of(const std::string& generator) const;  // -1 when absent
  EnvElement basis_bracket(int i, int j) const;
  void set_bracket(const std::string& a, const std::string& b,
                   const EnvElement& value);
};

// Built-in algebras: "hw" (basis H, X, P with [P, X] = H), "sl2" (basis rho,
// R, L with [rho, R] = 2R, [L, rho] = 2L, [L, R] = rho), and "schrodinger"
// (basis M, K, G, D, P_x, P_t). Throws Error("unknown-algebra") otherwise.
LieAlgebraSpec builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

// Rewrite into the PBW basis (words nondecreasing in basis order), resolving
// the leftmost inversion against the structure constants until fixed point.
// Words mentioning generators outside alg.basis are rejected by name.
EnvElement pbw_normalize(const EnvElement&, const LieAlgebraSpec&);

// Commutator ab - ba in the enveloping algebra, PBW-normalized.
EnvElement bracket(const EnvElement& a, const EnvElement& b,
                   const LieAlgebraSpec&);

// Jacobi identity over all basis triples i < j < k, one check per triple;
// failures carry the residual element.
Report verify_jacobi(const LieAlgebraSpec&);

// JSON presentation of an algebra (see README for the document shape).
Json algebra_to_json(const LieAlgebraSpec&);
LieAlgebraSpec algebra_from_json(const Json&);

}  // namespace bkit
