#pragma once

#include "bkit/berezin.hpp"

namespace bkit {

// Relation set [l0, r0] = rho0, [rho0, r0] = 2 r0, [l0, rho0] = 2 l0 for an
// arbitrary candidate triple of Weyl elements.
Report sl2_relations_report(const WeylPoly& l0, const WeylPoly& r0,
                            const WeylPoly& rho0, const std::string& subject);

// Decoupling of the Schrodinger algebra at m != 0: the shifted generators
//   L0 = P_t - P_x^2/(2m), R0 = K - G^2/(2m), rho0 = D - G P_x/m - 1/2
// close an sl2 triple, commute with the Heisenberg-Weyl part {G, P_x, M},
// have Berezin transforms (c-1/2) v1/(1-w1v1) etc., and those transforms
// vanish identically at c = 1/2.
TheoremReport check_decoupling(const Params&, int cap);

// Self-adjointness evidence: the Gram pairing is symmetric (all pairs of
// multi-indices with total degree <= 4), each adjoint generator pair has
// Berezin transforms exchanged under w <-> v, and the distinguished
// observables have symmetric transforms.
TheoremReport check_self_adjointness(const LieAlgebraSpec&, const Params&,
                                     int cap);
// Same, with an injectable adjoint assignment (mutation seam).
TheoremReport check_self_adjointness(const LieAlgebraSpec&, const AdjointMap&,
                                     const Params&, int cap);

// Vacuum moments of X1 = X + P in hw: odd moments vanish, even moments equal
// m^k (2k-1)!!, and the sequence matches the coefficients of e^{-s^2 m / 2}
// term by term (characteristic-function route).
TheoremReport gaussian_check(int max_order, const Rat& m);

// Hankel matrix H[i][j] = moment(i + j), i, j = 0..order, of the named
// observable; every leading principal minor must be >= 0 (exact arithmetic).
TheoremReport hankel_positivity(const LieAlgebraSpec&, const std::string& op,
                                const Params&, int order);

// The observable whose moment sequence the hankel suite examines:
// hw X1 = X + P, sl2 X2 = R + rho + L, schrodinger X2 = G + P_x.
std::string hankel_observable(const LieAlgebraSpec&);

// Gram positivity on the graded block of weighted degree <= degree (weights:
// hw/sl2 1, schrodinger (2, 1)), plus the graded sparsity of the pairing.
TheoremReport gram_psd(const LieAlgebraSpec&, const Params&, int degree);

// Exact leading principal minors det(A[0..k) x [0..k)), k = 1..n.
std::vector<Rat> leading_minors(const std::vector<std::vector<Rat>>&);

}  // namespace bkit
