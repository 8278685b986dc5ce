#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bkit/algebra.hpp"
#include "bkit/rational.hpp"
#include "bkit/report.hpp"

namespace bkit {

// Element of the Weyl algebra on `pairs` generator pairs (R_i, V_i) subject
// to V_i R_i = R_i V_i + 1, with generators of distinct pairs commuting.
// Terms are kept normally ordered (every R left of every V); the map key
// packs the exponents [r_1..r_n, v_1..v_n] of the monomial R^r V^v.
struct WeylPoly {
  int pairs = 1;
  std::map<std::vector<int>, Rat> terms;

  static WeylPoly zero(int pairs);
  static WeylPoly constant(int pairs, const Rat& value);
  static WeylPoly r(int pairs, int index);  // R_index, index is 1-based
  static WeylPoly v(int pairs, int index);  // V_index, index is 1-based
  static WeylPoly monomial(int pairs, const std::vector<int>& r_exps,
                           const std::vector<int>& v_exps, const Rat& coeff);

  WeylPoly& add_term(const std::vector<int>& key, const Rat& coeff);
  bool is_zero() const { return terms.empty(); }
  // Largest increase of total Fock degree one application can cause (>= 0).
  int degree_raise() const;
  std::string str() const;
  Json to_json() const;
};

WeylPoly operator+(const WeylPoly&, const WeylPoly&);
WeylPoly operator-(const WeylPoly&, const WeylPoly&);
WeylPoly operator*(const Rat&, const WeylPoly&);
bool operator==(const WeylPoly&, const WeylPoly&);

// Exact product with re-normal-ordering. Pair counts must match.
WeylPoly weyl_mul(const WeylPoly&, const WeylPoly&);
WeylPoly weyl_commutator(const WeylPoly&, const WeylPoly&);

// A realization of a Lie algebra inside the Weyl algebra.
struct HatMap {
  LieAlgebraSpec algebra;
  Params params;
  int pairs = 1;
  std::map<std::string, WeylPoly> images;
};

// The standard realizations of the built-in algebras:
//   hw:  H -> m,  X -> R,  P -> m V                      (one pair)
//   sl2: rho -> c + 2 R V,  R -> R,  L -> c V + R V^2    (one pair)
//   schrodinger (two pairs):
//     M -> m, K -> R1, G -> R2, D -> c + 2 R1 V1 + R2 V2,
//     P_x -> m V2 + R2 V1,
//     P_t -> c V1 + (m/2) V2^2 + R1 V1^2 + R2 V1 V2
// Rejects algebras without a built-in realization.
HatMap hat_rep(const LieAlgebraSpec&, const Params&);

// Multiplicative extension of the hat map to enveloping-algebra elements.
WeylPoly hat_of(const HatMap&, const EnvElement&);

// Verifies [hat(e_i), hat(e_j)] = hat([e_i, e_j]) over all basis pairs i < j.
Report check_homomorphism(const HatMap&);

struct DecoupledTriple {
  WeylPoly l0, r0, rho0;
};

// Schrodinger only, m != 0. Computes the shifted generators
//   L0   = hat(P_t) - hat(P_x)^2 / (2m)
//   R0   = hat(K)   - hat(G)^2   / (2m)
//   rho0 = hat(D)   - hat(G) hat(P_x) / m - 1/2
// and reports them against their closed normal-ordered forms in terms of
// R0' = R1 - R2^2/(2m):
//   L0 = (c - 1/2) V1 + R0' V1^2,  R0 = R0',  rho0 = (c - 1/2) + 2 R0' V1.
std::pair<DecoupledTriple, Report> decoupled_generators(const HatMap&);

}  // namespace bkit
