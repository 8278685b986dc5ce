#pragma once

#include "bkit/fock.hpp"
#include "bkit/series.hpp"

namespace bkit {

// ---------------------------------------------------------------------------
// Fock-route series. These rebuild the Leibniz function and the Berezin
// transforms from nothing but the Weyl realization, the adjoint assignment
// and exact Fock contractions, independently of every closed form:
//   Upsilon(w, v)   = sum_{alpha, beta} gram(alpha, beta) w^alpha v^beta
//                                       / (alpha! beta!)
//   <x>_{w,v}       = ( sum <alpha| hat(x) |beta> w^alpha v^beta
//                                       / (alpha! beta!) ) / Upsilon
// ---------------------------------------------------------------------------

MultiSeries leibniz_from_fock(const LieAlgebraSpec&, const Params&, int cap);
MultiSeries berezin_from_fock(const LieAlgebraSpec&, const EnvElement& x,
                              const Params&, int cap);

// Coefficientwise comparison up to `limit`, packaged as a report.
ComparisonReport compare_series(const std::string& subject,
                                const MultiSeries& lhs,
                                const std::string& lhs_source,
                                const MultiSeries& rhs,
                                const std::string& rhs_source, const Params&,
                                int limit);

// Route independence of the Leibniz function / one Berezin transform:
// Fock route vs closed form, compared through the full common cap.
ComparisonReport check_leibniz_routes(const LieAlgebraSpec&, const Params&,
                                      int cap);
ComparisonReport check_berezin_routes(const LieAlgebraSpec&,
                                      const std::string& op, const Params&,
                                      int cap);

// ---------------------------------------------------------------------------
// Defining PDEs. The transpose rule sends a normal-ordered lowering image
// R^a V^b to the operator v^b (d/dv)^a, giving for each pair index j
//   d Upsilon / d w_j = sum_terms coeff * v^powers * (d/dv)^derivs Upsilon.
// ---------------------------------------------------------------------------

struct PdeTerm {
  Rat coeff;
  std::vector<int> v_powers;  // multiply by v^powers
  std::vector<int> v_derivs;  // then-order partial derivatives, per pair
};

struct PdeSpec {
  std::string w_var;  // differentiated variable of the left-hand side
  std::vector<PdeTerm> rhs;
  std::string description;
};

std::vector<PdeSpec> defining_pdes(const LieAlgebraSpec&, const Params&);
ComparisonReport check_pde(const MultiSeries& upsilon, const PdeSpec&,
                           const Params&);
std::vector<ComparisonReport> check_defining_pdes(const LieAlgebraSpec&,
                                                  const Params&, int cap);

// ---------------------------------------------------------------------------
// Fock-valued series: states with series coefficients, the arena where the
// exponential factorization formulas are verified on the vacuum.
// ---------------------------------------------------------------------------

struct FockSeries {
  std::vector<std::string> vars;
  int cap = 0;
  int pairs = 1;
  std::map<std::vector<int>, FockVector> terms;

  static FockSeries vacuum(const std::vector<std::string>& vars, int cap,
                           int pairs);
  FockSeries& add_term(const std::vector<int>& expo, const FockVector&);
};

// An operator-valued series sum_e x^e W_e. Every exponent must be nonzero
// so that exponentials terminate at the series cap.
struct OpSeriesTerm {
  std::vector<int> expo;
  WeylPoly op;
};
using OpSeries = std::vector<OpSeriesTerm>;

// var ⊗ op and scalar-series ⊗ op constructors.
OpSeries op_var(const std::vector<std::string>& vars, int cap,
                const std::string& name, const WeylPoly& op);
OpSeries op_series(const MultiSeries& scalar, const WeylPoly& op);
OpSeries op_join(const OpSeries&, const OpSeries&);

// exp(A) psi = sum_k A^k psi / k!, exact at the series cap.
FockSeries exp_apply(const OpSeries&, const FockSeries&,
                     const TruncationPolicy&);
FockSeries scalar_mul(const MultiSeries&, const FockSeries&);
std::vector<Mismatch> fock_series_compare(const FockSeries&, const FockSeries&,
                                          int limit);

// The exponential factorization identities of each algebra, verified on the
// vacuum as Fock-valued series to degree cap:
//   hw:          e^{wP} e^{vX} = e^{vX} e^{mwv} e^{wP}
//   sl2:         e^{wL} e^{vR} = e^{v~R} (1-wv)^{-rho} e^{w~L},
//                v~ = v/(1-wv), w~ = w/(1-wv)
//   schrodinger: exp(a P_x + b G) = e^{bG} exp(mab/2) e^{aP_x}
//                (a = w2, b = v2), plus the coherent-state factorization
//                checked separately by check_lemma.
std::vector<ComparisonReport> check_leibniz_formula(const LieAlgebraSpec&,
                                                    const Params&, int cap);

// Coherent-state factorization for the Schrodinger algebra,
//   e^{w1 P_t + w2 P_x} e^{v1 K + v2 G} Omega
//     = (1-w1v1)^{-c} exp(f * (w1v2^2 + 2w2v2 + w2^2v1)/(1-w1v1))
//       exp(v1~ K + (v2~ + w2 v1~) G) Omega,
// with the consistent scalar factor f = m/2, or the raw doubled reading
// f = m^2/4 when `raw` is set (the two coincide exactly at m = 2).
ComparisonReport check_lemma(const Params&, int cap, bool raw);

// Independent 2x2 route for the sl2 factorization: rho = diag(1, -1),
// R = E12, L = -E21 (the sign forced by [L, R] = rho), both sides expanded
// as 2x2 matrices of series.
ComparisonReport check_sl2_matrix_route(const Params&, int cap);

}  // namespace bkit
