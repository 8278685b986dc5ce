#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkit/algebra.hpp"
#include "bkit/rational.hpp"
#include "bkit/report.hpp"

namespace bkit {

// Truncated multivariate formal power series over the exact rationals.
// The variable list is fixed at construction and orders the exponent vector;
// every monomial of total degree <= cap is carried exactly and everything
// above cap is dropped by construction, so two series agree as series up to
// degree cap iff their coefficient maps agree.
struct MultiSeries {
  std::vector<std::string> vars;
  int cap = 0;
  std::map<std::vector<int>, Rat> coeffs;

  static MultiSeries zero(const std::vector<std::string>& vars, int cap);
  static MultiSeries constant(const std::vector<std::string>& vars, int cap,
                              const Rat& value);
  static MultiSeries var(const std::vector<std::string>& vars, int cap,
                         const std::string& name);

  Rat coeff(const std::vector<int>& expo) const;
  MultiSeries& add_term(const std::vector<int>& expo, const Rat& coeff);
  bool is_zero() const { return coeffs.empty(); }
  int var_index(const std::string& name) const;  // -1 when absent
  std::string str() const;
  Json to_json() const;
};

// Same vars and same cap are required for all binary operations; mixing is
// rejected with Error("series-mismatch"). Use truncate() to align caps.
MultiSeries operator+(const MultiSeries&, const MultiSeries&);
MultiSeries operator-(const MultiSeries&, const MultiSeries&);
MultiSeries operator*(const Rat&, const MultiSeries&);
bool operator==(const MultiSeries&, const MultiSeries&);

MultiSeries series_mul(const MultiSeries&, const MultiSeries&);
// Division by a series with nonzero constant term.
MultiSeries series_div(const MultiSeries&, const MultiSeries&);
// exp of a series with zero constant term.
MultiSeries series_exp(const MultiSeries&);
// log of a series with constant term one.
MultiSeries series_log(const MultiSeries&);
// base^exponent: integer exponents by repeated multiplication (inverting for
// negative ones), fractional exponents via exp(e log base) with unit constant
// term required.
MultiSeries series_pow(const MultiSeries& base, const Rat& exponent);
// Formal partial derivative; the result is exact only to cap - 1, so the
// returned series has its cap lowered accordingly.
MultiSeries series_deriv(const MultiSeries&, const std::string& var);
MultiSeries truncate(const MultiSeries&, int new_cap);
// Exchange w_i <-> v_i for every i; other variables must be self-paired.
MultiSeries swap_wv(const MultiSeries&);

// Monomial as a printable key, e.g. "w1^2 v2" (constant term prints as "1").
std::string monomial_key(const std::vector<std::string>& vars,
                         const std::vector<int>& expo);

// All differing coefficients of total degree <= limit (and <= both caps),
// in graded lexicographic order.
std::vector<Mismatch> series_compare(const MultiSeries&, const MultiSeries&,
                                     int limit);

// Variable lists used for the Leibniz/Berezin series of each algebra.
std::vector<std::string> series_vars(const LieAlgebraSpec&);

// Closed form of the Leibniz function Upsilon(w, v):
//   hw:          exp(m w1 v1)
//   sl2:         (1 - w1 v1)^(-c)
//   schrodinger: (1 - w1 v1)^(-c)
//                * exp( (m/2) (w1 v2^2 + 2 w2 v2 + w2^2 v1) / (1 - w1 v1) )
MultiSeries closed_form_leibniz(const LieAlgebraSpec&, const Params&, int cap);

// Closed form of the Berezin transform <op>_{w,v} for the catalog below;
// unknown names are rejected with the available list in the message.
MultiSeries closed_form_berezin(const LieAlgebraSpec&, const std::string& op,
                                const Params&, int cap);
std::vector<std::string> berezin_catalog(const LieAlgebraSpec&);

// The observable behind a catalog name (X1 = sum of one full raising/scaling/
// lowering chain, X2 = the shorter chain, L0/R0/rho0 = decoupled sl2 triple
// as enveloping expressions). Generator names map to themselves.
EnvElement catalog_observable(const LieAlgebraSpec&, const std::string& op,
                              const Params&);

}  // namespace bkit
