#include "bkit/berezin.hpp"

#include <functional>
#include <numeric>

namespace bkit {

static int total_degree(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

static Rat multi_factorial(const std::vector<int>& e) {
  Rat out(1);
  for (int k : e) out *= factorial(k);
  return out;
}

// Enumerate, for every alpha with |alpha| <= bound, the state obtained by
// applying the lowering word of alpha to `start`, sharing prefixes.
static void contract_all(const HatMap& h, const AdjointMap& adj,
                         const FockVector& start, int bound,
                         const TruncationPolicy& policy,
                         const std::function<void(const std::vector<int>&,
                                                  const FockVector&)>& emit) {
  const auto raising = raising_generators(h.algebra);
  std::vector<WeylPoly> lows;
  for (const auto& r : raising)
    lows.push_back(hat_of(h, EnvElement::gen(adj.lowering_of.at(r))));
  std::vector<int> alpha(raising.size(), 0);
  std::function<void(size_t, const FockVector&, int)> rec =
      [&](size_t pair, const FockVector& state, int remaining) {
        if (pair == lows.size()) {
          emit(alpha, state);
          return;
        }
        FockVector cur = state;
        for (int k = 0;; ++k) {
          alpha[pair] = k;
          rec(pair + 1, cur, remaining - k);
          if (k == remaining) break;
          cur = apply(lows[pair], cur, policy);
        }
        alpha[pair] = 0;
      };
  rec(0, start, bound);
}

// All multi-indices of the given length with total degree <= bound.
static std::vector<std::vector<int>> indices_up_to(int length, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  rec(0, bound);
  return out;
}

MultiSeries leibniz_from_fock(const LieAlgebraSpec& alg, const Params& p,
                              int cap) {
  const HatMap h = hat_rep(alg, p);
  const AdjointMap adj = default_adjoint(alg);
  const auto vars = series_vars(alg);
  const int pairs = h.pairs;
  TruncationPolicy policy;
  policy.max_degree = cap + policy.margin;
  MultiSeries out = MultiSeries::zero(vars, cap);
  for (const auto& beta : indices_up_to(pairs, cap)) {
    const FockVector ket = FockVector::basis(pairs, beta);
    const Rat bfac = multi_factorial(beta);
    contract_all(h, adj, ket, cap - total_degree(beta), policy,
                 [&](const std::vector<int>& alpha, const FockVector& state) {
                   const Rat g = vacuum_component(state);
                   if (g == 0) return;
                   std::vector<int> expo = alpha;
                   expo.insert(expo.end(), beta.begin(), beta.end());
                   out.add_term(expo, g / (multi_factorial(alpha) * bfac));
                 });
  }
  return out;
}

MultiSeries berezin_from_fock(const LieAlgebraSpec& alg, const EnvElement& x,
                              const Params& p, int cap) {
  const HatMap h = hat_rep(alg, p);
  const AdjointMap adj = default_adjoint(alg);
  const auto vars = series_vars(alg);
  const int pairs = h.pairs;
  const WeylPoly op = hat_of(h, pbw_normalize(x, alg));
  TruncationPolicy policy;
  policy.max_degree = cap + op.degree_raise() + 2 * policy.margin;
  MultiSeries numerator = MultiSeries::zero(vars, cap);
  for (const auto& beta : indices_up_to(pairs, cap)) {
    const FockVector ket =
        apply(op, FockVector::basis(pairs, beta), policy);
    if (ket.truncated)
      throw Error("truncation-insufficient",
                  "berezin numerator exceeded the truncation policy");
    const Rat bfac = multi_factorial(beta);
    contract_all(h, adj, ket, cap - total_degree(beta), policy,
                 [&](const std::vector<int>& alpha, const FockVector& state) {
                   const Rat g = vacuum_component(state);
                   if (g == 0) return;
                   std::vector<int> expo = alpha;
                   expo.insert(expo.end(), beta.begin(), beta.end());
                   numerator.add_term(expo,
                                      g / (multi_factorial(alpha) * bfac));
                 });
  }
  return series_div(numerator, leibniz_from_fock(alg, p, cap));
}

ComparisonReport compare_series(const std::string& subject,
                                const MultiSeries& lhs,
                                const std::string& lhs_source,
                                const MultiSeries& rhs,
                                const std::string& rhs_source, const Params& p,
                                int limit) {
  ComparisonReport report;
  report.subject = subject;
  report.lhs_source = lhs_source;
  report.rhs_source = rhs_source;
  report.cap = limit;
  report.params = p;
  report.mismatches = series_compare(lhs, rhs, limit);
  return report;
}

ComparisonReport check_leibniz_routes(const LieAlgebraSpec& alg,
                                      const Params& p, int cap) {
  return compare_series("leibniz(" + alg.name + ")",
                        leibniz_from_fock(alg, p, cap), "fock contraction",
                        closed_form_leibniz(alg, p, cap), "closed form", p,
                        cap);
}

ComparisonReport check_berezin_routes(const LieAlgebraSpec& alg,
                                      const std::string& op, const Params& p,
                                      int cap) {
  return compare_series(
      "berezin(" + alg.name + ", " + op + ")",
      berezin_from_fock(alg, catalog_observable(alg, op, p), p, cap),
      "fock contraction", closed_form_berezin(alg, op, p, cap), "closed form",
      p, cap);
}

// --- defining PDEs ---------------------------------------------------------

static std::string pde_term_str(const PdeTerm& term) {
  std::string out = rat_str(term.coeff);
  for (size_t i = 0; i < term.v_powers.size(); ++i) {
    if (term.v_powers[i] == 0) continue;
    out += " v" + std::to_string(i + 1);
    if (term.v_powers[i] > 1) out += "^" + std::to_string(term.v_powers[i]);
  }
  bool derived = false;
  for (size_t i = 0; i < term.v_derivs.size(); ++i)
    for (int k = 0; k < term.v_derivs[i]; ++k) {
      out += " d/dv" + std::to_string(i + 1);
      derived = true;
    }
  (void)derived;
  return out + " Y";
}

std::vector<PdeSpec> defining_pdes(const LieAlgebraSpec& alg,
                                   const Params& p) {
  const HatMap h = hat_rep(alg, p);
  const AdjointMap adj = default_adjoint(alg);
  const auto raising = raising_generators(alg);
  const int pairs = h.pairs;
  std::vector<PdeSpec> out;
  for (size_t j = 0; j < raising.size(); ++j) {
    const std::string lname = adj.lowering_of.at(raising[j]);
    const WeylPoly low = hat_of(h, EnvElement::gen(lname));
    PdeSpec pde;
    pde.w_var = "w" + std::to_string(j + 1);
    for (const auto& [key, coeff] : low.terms) {
      PdeTerm term;
      term.coeff = coeff;
      term.v_derivs.assign(key.begin(), key.begin() + pairs);
      term.v_powers.assign(key.begin() + pairs, key.end());
      pde.rhs.push_back(term);
    }
    std::string rhs_str;
    for (const auto& term : pde.rhs)
      rhs_str += (rhs_str.empty() ? "" : " + ") + pde_term_str(term);
    pde.description = "d/d" + pde.w_var + " Y = " + rhs_str +
                      "   (transpose of " + lname + ")";
    out.push_back(pde);
  }
  return out;
}

// Multiply by the monomial v^powers; exactness grows with the monomial degree.
static MultiSeries mono_mul_v(const MultiSeries& s,
                              const std::vector<int>& v_powers) {
  std::vector<int> shift(s.vars.size(), 0);
  int extra = 0;
  for (size_t i = 0; i < v_powers.size(); ++i) {
    if (v_powers[i] == 0) continue;
    const int idx = s.var_index("v" + std::to_string(i + 1));
    if (idx < 0)
      throw Error("series-mismatch",
                  "variable v" + std::to_string(i + 1) + " not in series");
    shift[idx] = v_powers[i];
    extra += v_powers[i];
  }
  MultiSeries out = MultiSeries::zero(s.vars, s.cap + extra);
  for (const auto& [expo, c] : s.coeffs) {
    std::vector<int> e = expo;
    for (size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    out.coeffs.emplace(std::move(e), c);
  }
  return out;
}

ComparisonReport check_pde(const MultiSeries& upsilon, const PdeSpec& pde,
                           const Params& p) {
  MultiSeries lhs = series_deriv(upsilon, pde.w_var);
  int bound = lhs.cap;
  std::vector<MultiSeries> pieces;
  for (const auto& term : pde.rhs) {
    MultiSeries piece = upsilon;
    for (size_t i = 0; i < term.v_derivs.size(); ++i)
      for (int k = 0; k < term.v_derivs[i]; ++k)
        piece = series_deriv(piece, "v" + std::to_string(i + 1));
    piece = mono_mul_v(piece, term.v_powers);
    pieces.push_back(term.coeff * piece);
    bound = std::min(bound, piece.cap);
  }
  MultiSeries rhs = MultiSeries::zero(upsilon.vars, bound);
  for (const auto& piece : pieces) rhs = rhs + truncate(piece, bound);
  return compare_series(pde.description, truncate(lhs, bound),
                        "d/dw of fock-route Y", rhs, "transpose image of Y", p,
                        bound);
}

std::vector<ComparisonReport> check_defining_pdes(const LieAlgebraSpec& alg,
                                                  const Params& p, int cap) {
  const MultiSeries upsilon = leibniz_from_fock(alg, p, cap);
  std::vector<ComparisonReport> out;
  for (const auto& pde : defining_pdes(alg, p))
    out.push_back(check_pde(upsilon, pde, p));
  return out;
}

// --- Fock-valued series ----------------------------------------------------

FockSeries FockSeries::vacuum(const std::vector<std::string>& vars, int cap,
                              int pairs) {
  FockSeries fs{vars, cap, pairs, {}};
  fs.terms.emplace(std::vector<int>(vars.size(), 0),
                   FockVector::vacuum(pairs));
  return fs;
}

FockSeries& FockSeries::add_term(const std::vector<int>& expo,
                                 const FockVector& state) {
  if (expo.size() != vars.size())
    throw Error("series-mismatch", "exponent length does not match variables");
  if (total_degree(expo) > cap || state.is_zero()) return *this;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, state);
  } else {
    it->second = it->second + state;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

OpSeries op_var(const std::vector<std::string>& vars, int cap,
                const std::string& name, const WeylPoly& op) {
  return op_series(MultiSeries::var(vars, cap, name), op);
}

OpSeries op_series(const MultiSeries& scalar, const WeylPoly& op) {
  OpSeries out;
  for (const auto& [expo, c] : scalar.coeffs) {
    if (total_degree(expo) == 0)
      throw Error("bad-argument",
                  "operator series needs a vanishing constant term");
    out.push_back(OpSeriesTerm{expo, c * op});
  }
  return out;
}

OpSeries op_join(const OpSeries& a, const OpSeries& b) {
  OpSeries out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FockSeries exp_apply(const OpSeries& gen, const FockSeries& in,
                     const TruncationPolicy& policy) {
  FockSeries out = in;
  FockSeries cur = in;
  for (int k = 1; k <= in.cap && !cur.terms.empty(); ++k) {
    FockSeries next{in.vars, in.cap, in.pairs, {}};
    for (const auto& [expo, state] : cur.terms)
      for (const auto& term : gen) {
        std::vector<int> combined = expo;
        for (size_t i = 0; i < combined.size(); ++i)
          combined[i] += term.expo[i];
        if (total_degree(combined) > in.cap) continue;
        FockVector applied = apply(term.op, state, policy);
        if (applied.truncated)
          throw Error("truncation-insufficient",
                      "exponential application exceeded the truncation policy");
        next.add_term(combined, Rat(Rat(1) / k) * applied);
      }
    for (const auto& [expo, state] : next.terms) out.add_term(expo, state);
    cur = std::move(next);
  }
  return out;
}

FockSeries scalar_mul(const MultiSeries& scalar, const FockSeries& in) {
  if (scalar.vars != in.vars)
    throw Error("series-mismatch",
                "scalar series variables do not match the state series");
  FockSeries out{in.vars, in.cap, in.pairs, {}};
  for (const auto& [es, c] : scalar.coeffs)
    for (const auto& [ef, state] : in.terms) {
      std::vector<int> combined = es;
      for (size_t i = 0; i < combined.size(); ++i) combined[i] += ef[i];
      if (total_degree(combined) > in.cap) continue;
      out.add_term(combined, c * state);
    }
  return out;
}

std::vector<Mismatch> fock_series_compare(const FockSeries& a,
                                          const FockSeries& b, int limit) {
  if (a.vars != b.vars || a.pairs != b.pairs)
    throw Error("series-mismatch", "comparing incompatible state series");
  const int bound = std::min({limit, a.cap, b.cap});
  std::map<std::vector<int>, bool> keys;
  for (const auto& [e, s] : a.terms) keys.emplace(e, true);
  for (const auto& [e, s] : b.terms) keys.emplace(e, true);
  std::vector<std::pair<std::vector<int>, Mismatch>> found;
  for (const auto& [e, unused] : keys) {
    (void)unused;
    if (total_degree(e) > bound) continue;
    auto ia = a.terms.find(e);
    auto ib = b.terms.find(e);
    const FockVector za = ia == a.terms.end()
                              ? FockVector{a.pairs, {}, false}
                              : ia->second;
    const FockVector zb = ib == b.terms.end()
                              ? FockVector{b.pairs, {}, false}
                              : ib->second;
    if (!(za == zb))
      found.emplace_back(
          e, Mismatch{monomial_key(a.vars, e), za.str(), zb.str()});
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    const int dx = total_degree(x.first), dy = total_degree(y.first);
    return dx != dy ? dx < dy : x.first < y.first;
  });
  std::vector<Mismatch> out;
  for (auto& [e, mm] : found) out.push_back(std::move(mm));
  return out;
}

// --- exponential factorization formulas -------------------------------------

std::vector<ComparisonReport> check_leibniz_formula(const LieAlgebraSpec& alg,
                                                    const Params& p, int cap) {
  const HatMap h = hat_rep(alg, p);
  const auto vars = series_vars(alg);
  TruncationPolicy policy;
  policy.max_degree = cap + policy.margin;
  const FockSeries vac = FockSeries::vacuum(vars, cap, h.pairs);
  auto C1 = [&]() { return MultiSeries::constant(vars, cap, Rat(1)); };
  auto V = [&](const std::string& n) { return MultiSeries::var(vars, cap, n); };
  std::vector<ComparisonReport> out;

  if (alg.name == "hw") {
    const WeylPoly& x = h.images.at("X");
    const WeylPoly& pp = h.images.at("P");
    FockSeries lhs = exp_apply(op_var(vars, cap, "w1", pp),
                               exp_apply(op_var(vars, cap, "v1", x), vac, policy),
                               policy);
    FockSeries rhs = exp_apply(
        op_var(vars, cap, "v1", x),
        scalar_mul(series_exp(p.m * series_mul(V("w1"), V("v1"))),
                   exp_apply(op_var(vars, cap, "w1", pp), vac, policy)),
        policy);
    ComparisonReport rep;
    rep.subject = "leibniz-formula(hw)";
    rep.lhs_source = "e^{w P} e^{v X} Omega";
    rep.rhs_source = "e^{v X} e^{m w v} e^{w P} Omega";
    rep.cap = cap;
    rep.params = p;
    rep.mismatches = fock_series_compare(lhs, rhs, cap);
    out.push_back(rep);
    return out;
  }

  if (alg.name == "sl2") {
    const WeylPoly& r = h.images.at("R");
    const WeylPoly& l = h.images.at("L");
    const WeylPoly& rho = h.images.at("rho");
    FockSeries lhs = exp_apply(op_var(vars, cap, "w1", l),
                               exp_apply(op_var(vars, cap, "v1", r), vac, policy),
                               policy);
    const MultiSeries u = C1() - series_mul(V("w1"), V("v1"));
    const MultiSeries vt = series_div(V("v1"), u);
    const MultiSeries wt = series_div(V("w1"), u);
    FockSeries rhs = exp_apply(
        op_series(vt, r),
        exp_apply(op_series(Rat(-1) * series_log(u), rho),
                  exp_apply(op_series(wt, l), vac, policy), policy),
        policy);
    ComparisonReport rep;
    rep.subject = "leibniz-formula(sl2)";
    rep.lhs_source = "e^{w L} e^{v R} Omega";
    rep.rhs_source = "e^{v~ R} (1-wv)^{-rho} e^{w~ L} Omega";
    rep.cap = cap;
    rep.params = p;
    rep.mismatches = fock_series_compare(lhs, rhs, cap);
    out.push_back(rep);
    out.push_back(check_sl2_matrix_route(p, cap));
    return out;
  }

  if (alg.name == "schrodinger") {
    const WeylPoly& px = h.images.at("P_x");
    const WeylPoly& g = h.images.at("G");
    FockSeries lhs = exp_apply(op_join(op_var(vars, cap, "w2", px),
                                       op_var(vars, cap, "v2", g)),
                               vac, policy);
    FockSeries rhs = exp_apply(
        op_var(vars, cap, "v2", g),
        scalar_mul(series_exp(Rat(p.m / 2) * series_mul(V("w2"), V("v2"))),
                   exp_apply(op_var(vars, cap, "w2", px), vac, policy)),
        policy);
    ComparisonReport rep;
    rep.subject = "hw-exponential(schrodinger)";
    rep.lhs_source = "exp(a P_x + b G) Omega";
    rep.rhs_source = "e^{b G} e^{m a b / 2} e^{a P_x} Omega";
    rep.cap = cap;
    rep.params = p;
    rep.mismatches = fock_series_compare(lhs, rhs, cap);
    out.push_back(rep);
    out.push_back(check_lemma(p, cap, false));
    return out;
  }

  throw Error("no-hat-representation",
              "no factorization formulas for algebra '" + alg.name + "'");
}

ComparisonReport check_lemma(const Params& p, int cap, bool raw) {
  const LieAlgebraSpec alg = builtin("schrodinger");
  const HatMap h = hat_rep(alg, p);
  const auto vars = series_vars(alg);
  TruncationPolicy policy;
  policy.max_degree = cap + policy.margin;
  const FockSeries vac = FockSeries::vacuum(vars, cap, h.pairs);
  auto V = [&](const std::string& n) { return MultiSeries::var(vars, cap, n); };

  const WeylPoly& pt = h.images.at("P_t");
  const WeylPoly& px = h.images.at("P_x");
  const WeylPoly& k = h.images.at("K");
  const WeylPoly& g = h.images.at("G");

  FockSeries lhs = exp_apply(
      op_join(op_var(vars, cap, "w1", pt), op_var(vars, cap, "w2", px)),
      exp_apply(op_join(op_var(vars, cap, "v1", k), op_var(vars, cap, "v2", g)),
                vac, policy),
      policy);

  const MultiSeries u = MultiSeries::constant(vars, cap, Rat(1)) -
                        series_mul(V("w1"), V("v1"));
  const MultiSeries ratio =
      series_div(series_mul(V("w1"), series_mul(V("v2"), V("v2"))) +
                     Rat(2) * series_mul(V("w2"), V("v2")) +
                     series_mul(series_mul(V("w2"), V("w2")), V("v1")),
                 u);
  const Rat factor = raw ? Rat(p.m * p.m / 4) : Rat(p.m / 2);
  const MultiSeries prefactor =
      series_mul(series_pow(u, -p.c), series_exp(factor * ratio));

  const MultiSeries vt1 = series_div(V("v1"), u);
  const MultiSeries vt2 = series_div(V("v2"), u);
  const MultiSeries gcoef = vt2 + series_mul(V("w2"), vt1);
  FockSeries rhs = scalar_mul(
      prefactor,
      exp_apply(op_join(op_series(vt1, k), op_series(gcoef, g)), vac, policy));

  ComparisonReport rep;
  rep.subject = raw ? "lemma-raw-reading(schrodinger)"
                    : "lemma-consistent(schrodinger)";
  rep.lhs_source = "e^{w1 P_t + w2 P_x} e^{v1 K + v2 G} Omega";
  rep.rhs_source =
      std::string("(1-w1v1)^{-c} exp(") + (raw ? "(m/2) q~" : "(m/2) q") +
      ") exp(v1~ K + (v2~ + w2 v1~) G) Omega";
  rep.cap = cap;
  rep.params = p;
  rep.mismatches = fock_series_compare(lhs, rhs, cap);
  return rep;
}

// 2x2 matrices of series, enough structure for the sl2 route.
namespace {

using Mat = std::array<std::array<MultiSeries, 2>, 2>;

Mat mat_zero(const std::vector<std::string>& vars, int cap) {
  MultiSeries z = MultiSeries::zero(vars, cap);
  return Mat{{{z, z}, {z, z}}};
}

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat out = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = series_mul(a[i][0], b[0][j]) + series_mul(a[i][1], b[1][j]);
  return out;
}

// exp of a matrix of series with nilpotent or zero-constant entries: the
// series sum terminates at the scalar cap.
Mat mat_exp(const Mat& a) {
  const auto& vars = a[0][0].vars;
  const int cap = a[0][0].cap;
  Mat out = mat_zero(vars, cap);
  out[0][0] = MultiSeries::constant(vars, cap, Rat(1));
  out[1][1] = out[0][0];
  Mat term = out;
  for (int k = 1; k <= cap + 2; ++k) {
    term = mat_mul(term, a);
    bool zero = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        term[i][j] = Rat(Rat(1) / k) * term[i][j];
        zero = zero && term[i][j].is_zero();
      }
    if (zero) break;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[i][j] = out[i][j] + term[i][j];
  }
  return out;
}

Mat mat_scale(const MultiSeries& s, const Mat& a) {
  Mat out = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = series_mul(s, a[i][j]);
  return out;
}

}  // namespace

ComparisonReport check_sl2_matrix_route(const Params& p, int cap) {
  const std::vector<std::string> vars{"w1", "v1"};
  auto C = [&](const Rat& r) { return MultiSeries::constant(vars, cap, r); };
  auto V = [&](const std::string& n) { return MultiSeries::var(vars, cap, n); };

  // rho = diag(1, -1), R = E12, L = -E21 (sign forced by [L, R] = rho).
  Mat rho = mat_zero(vars, cap), r = mat_zero(vars, cap),
      l = mat_zero(vars, cap);
  rho[0][0] = C(Rat(1));
  rho[1][1] = C(Rat(-1));
  r[0][1] = C(Rat(1));
  l[1][0] = C(Rat(-1));

  const Mat lhs =
      mat_mul(mat_exp(mat_scale(V("w1"), l)), mat_exp(mat_scale(V("v1"), r)));

  const MultiSeries u = C(Rat(1)) - series_mul(V("w1"), V("v1"));
  const MultiSeries vt = series_div(V("v1"), u);
  const MultiSeries wt = series_div(V("w1"), u);
  const Mat rhs = mat_mul(
      mat_exp(mat_scale(vt, r)),
      mat_mul(mat_exp(mat_scale(Rat(-1) * series_log(u), rho)),
              mat_exp(mat_scale(wt, l))));

  ComparisonReport rep;
  rep.subject = "leibniz-formula(sl2, 2x2 route)";
  rep.lhs_source = "e^{w L} e^{v R} as 2x2 matrices";
  rep.rhs_source = "e^{v~ R} (1-wv)^{-rho} e^{w~ L} as 2x2 matrices";
  rep.cap = cap;
  rep.params = p;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& mm : series_compare(lhs[i][j], rhs[i][j], cap))
        rep.mismatches.push_back(
            Mismatch{"entry(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") " + mm.key,
                     mm.lhs, mm.rhs});
  return rep;
}

}  // namespace bkit
