#pragma once

#include <map>
#include <vector>

#include "bkit/weyl.hpp"

namespace bkit {

// A state in the graded Fock module spanned by |k> = R^k Omega. The basis
// action is exact:
//   R_i |k> = |k + e_i>          V_i |k> = k_i |k - e_i>
// so every computation here is exact rational arithmetic on finitely many
// components. `truncated` is sticky: it is set the moment any component
// beyond a policy's max_degree gets dropped, and it propagates through all
// subsequent arithmetic, so a result with truncated == false is exact.
struct FockVector {
  int pairs = 1;
  std::map<std::vector<int>, Rat> entries;
  bool truncated = false;

  static FockVector vacuum(int pairs);
  static FockVector basis(int pairs, const std::vector<int>& index);

  FockVector& add_entry(const std::vector<int>& index, const Rat& coeff);
  bool is_zero() const { return entries.empty(); }
  std::string str() const;
  Json to_json() const;
};

FockVector operator+(const FockVector&, const FockVector&);
FockVector operator-(const FockVector&, const FockVector&);
FockVector operator*(const Rat&, const FockVector&);
bool operator==(const FockVector&, const FockVector&);

// Components of total degree above max_degree are dropped (and flagged).
// margin is the headroom internal callers add when sizing a policy from a
// requested output degree.
struct TruncationPolicy {
  int max_degree = 12;
  int margin = 2;
};

// Apply a normal-ordered Weyl element to a state under the policy.
FockVector apply(const WeylPoly&, const FockVector&, const TruncationPolicy&);

// Coefficient of the vacuum |0>. Because the pairing of |0> against any
// other graded basis vector vanishes, this is exactly <Omega | state>.
Rat vacuum_component(const FockVector&);

// Adjoint assignment raising -> lowering generator for the built-in
// algebras: X* = P (hw), R* = L (sl2), K* = P_t and G* = P_x (schrodinger).
struct AdjointMap {
  std::map<std::string, std::string> lowering_of;
};
AdjointMap default_adjoint(const LieAlgebraSpec&);

// Raising generators in pair order (pair i is raised by the i-th name):
// hw {X}, sl2 {R}, schrodinger {K, G}.
std::vector<std::string> raising_generators(const LieAlgebraSpec&);

// Gram pairing <alpha | beta> of |alpha> = R^alpha Omega against |beta>:
// applies the adjoint (lowering) word of alpha to |beta> and reads off the
// vacuum component. Throws Error("truncation-insufficient") naming the
// required degree when the policy cannot hold the intermediate states.
Rat gram(const HatMap&, const AdjointMap&, const std::vector<int>& alpha,
         const std::vector<int>& beta, const TruncationPolicy&);
// Same, with the default adjoint and a self-sized policy.
Rat gram(const HatMap&, const std::vector<int>& alpha,
         const std::vector<int>& beta);

// Dense Gram matrix over the given list of multi-indices.
std::vector<std::vector<Rat>> gram_matrix(
    const HatMap&, const std::vector<std::vector<int>>& states);

// n-th vacuum moment <Omega | x^n Omega> of an enveloping-algebra element.
// The policy must accommodate n * degree_raise(hat(x)); the overload without
// a policy sizes one automatically.
Rat moment(const HatMap&, const EnvElement& x, int n,
           const TruncationPolicy&);
Rat moment(const HatMap&, const EnvElement& x, int n);

}  // namespace bkit
