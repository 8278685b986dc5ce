#include "bkit/theorems.hpp"

#include <algorithm>
#include <functional>

namespace bkit {

Report sl2_relations_report(const WeylPoly& l0, const WeylPoly& r0,
                            const WeylPoly& rho0, const std::string& subject) {
  Report report;
  report.subject = subject;
  auto check = [&](const std::string& desc, const WeylPoly& got,
                   const WeylPoly& want) {
    CheckItem item;
    item.description = desc;
    item.pass = got == want;
    if (!item.pass)
      item.detail = "residual " + (got - want).str();
    report.checks.push_back(item);
  };
  check("[L0, R0] = rho0", weyl_commutator(l0, r0), rho0);
  check("[rho0, R0] = 2 R0", weyl_commutator(rho0, r0), Rat(2) * r0);
  check("[L0, rho0] = 2 L0", weyl_commutator(l0, rho0), Rat(2) * l0);
  return report;
}

TheoremReport check_decoupling(const Params& p, int cap) {
  TheoremReport report;
  report.theorem = "decoupling(schrodinger)";
  const Params at_half{p.m, Rat(1, 2)};
  report.params = {p, at_half};

  const LieAlgebraSpec alg = builtin("schrodinger");
  const HatMap h = hat_rep(alg, p);
  auto [triple, closed_report] = decoupled_generators(h);
  for (auto& item : closed_report.checks) report.checks.push_back(item);

  for (auto& item :
       sl2_relations_report(triple.l0, triple.r0, triple.rho0, "").checks)
    report.checks.push_back(item);

  // The shifted triple commutes with the Heisenberg-Weyl part.
  const std::vector<std::pair<std::string, WeylPoly>> hw_part{
      {"G", h.images.at("G")},
      {"P_x", h.images.at("P_x")},
      {"M", h.images.at("M")}};
  const std::vector<std::pair<std::string, WeylPoly>> sl2_part{
      {"L0", triple.l0}, {"R0", triple.r0}, {"rho0", triple.rho0}};
  for (const auto& [sname, spoly] : sl2_part)
    for (const auto& [hname, hpoly] : hw_part) {
      CheckItem item;
      item.description = "[" + sname + ", " + hname + "] = 0";
      const WeylPoly residual = weyl_commutator(spoly, hpoly);
      item.pass = residual.is_zero();
      if (!item.pass) item.detail = "residual " + residual.str();
      report.checks.push_back(item);
    }

  // Berezin transforms of the shifted generators match the shifted closed
  // forms (fock route vs closed form).
  for (const std::string op : {"L0", "R0", "rho0"}) {
    const ComparisonReport cmp = check_berezin_routes(alg, op, p, cap);
    CheckItem item;
    item.description = "berezin(" + op + ") fock route = (c-1/2) closed form";
    item.pass = cmp.pass();
    if (!item.pass)
      item.detail = "first mismatch at " + cmp.mismatches.front().key + ": " +
                    cmp.mismatches.front().lhs + " vs " +
                    cmp.mismatches.front().rhs;
    report.checks.push_back(item);
  }

  // At c = 1/2 the shifted transforms vanish identically.
  for (const std::string op : {"L0", "R0", "rho0"}) {
    const MultiSeries fock =
        berezin_from_fock(alg, catalog_observable(alg, op, at_half), at_half,
                          cap);
    const MultiSeries closed = closed_form_berezin(alg, op, at_half, cap);
    CheckItem item;
    item.description = "berezin(" + op + ") vanishes at c = 1/2";
    item.pass = fock.is_zero() && closed.is_zero();
    if (!item.pass)
      item.detail = "fock route " + fock.str() + ", closed form " + closed.str();
    report.checks.push_back(item);
  }
  return report;
}

TheoremReport check_self_adjointness(const LieAlgebraSpec& alg,
                                     const Params& p, int cap) {
  return check_self_adjointness(alg, default_adjoint(alg), p, cap);
}

TheoremReport check_self_adjointness(const LieAlgebraSpec& alg,
                                     const AdjointMap& adj, const Params& p,
                                     int cap) {
  TheoremReport report;
  report.theorem = "self-adjointness(" + alg.name + ")";
  report.params = {p};
  const HatMap h = hat_rep(alg, p);

  // Gram symmetry over the window of multi-indices of total degree <= 4.
  {
    CheckItem item;
    item.description = "gram(alpha, beta) = gram(beta, alpha), degrees <= 4";
    item.pass = true;
    const int pairs = h.pairs;
    std::vector<std::vector<int>> window;
    std::vector<int> cur(pairs, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == pairs) {
        window.push_back(cur);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        cur[pos] = k;
        rec(pos + 1, left - k);
      }
      cur[pos] = 0;
    };
    rec(0, 4);
    TruncationPolicy policy;
    policy.max_degree = 8 + policy.margin;
    for (const auto& a : window) {
      for (const auto& b : window) {
        const Rat ab = gram(h, adj, a, b, policy);
        const Rat ba = gram(h, adj, b, a, policy);
        if (ab != ba) {
          item.pass = false;
          item.detail = "gram asymmetry at alpha = " +
                        FockVector::basis(pairs, a).str() + ", beta = " +
                        FockVector::basis(pairs, b).str() + ": " + rat_str(ab) +
                        " vs " + rat_str(ba);
          break;
        }
      }
      if (!item.pass) break;
    }
    report.checks.push_back(item);
  }

  // Adjoint pairs have transforms exchanged by w <-> v; distinguished
  // observables have symmetric transforms.
  auto transform = [&](const std::string& op) {
    return berezin_from_fock(alg, catalog_observable(alg, op, p), p, cap);
  };
  for (const auto& [raise, lower] : adj.lowering_of) {
    CheckItem item;
    item.description = "<" + raise + ">(v, w) = <" + lower + ">(w, v)";
    const auto mm = series_compare(swap_wv(transform(raise)), transform(lower),
                                   cap);
    item.pass = mm.empty();
    if (!item.pass)
      item.detail = "first mismatch at " + mm.front().key + ": " +
                    mm.front().lhs + " vs " + mm.front().rhs;
    report.checks.push_back(item);
  }
  const std::vector<std::string> observables =
      alg.name == "hw"           ? std::vector<std::string>{"X1"}
      : alg.name == "sl2"        ? std::vector<std::string>{"X2"}
      : alg.name == "schrodinger"
          ? std::vector<std::string>{"X1", "X2"}
          : std::vector<std::string>{};
  for (const auto& op : observables) {
    CheckItem item;
    item.description = "<" + op + "> is symmetric in w and v";
    const MultiSeries t = transform(op);
    const auto mm = series_compare(swap_wv(t), t, cap);
    item.pass = mm.empty();
    if (!item.pass)
      item.detail = "first mismatch at " + mm.front().key + ": " +
                    mm.front().lhs + " vs " + mm.front().rhs;
    report.checks.push_back(item);
  }
  return report;
}

static Rat double_factorial_odd(int n) {  // (n - 1)!! for even n >= 0
  Rat out(1);
  for (int k = n - 1; k >= 1; k -= 2) out *= k;
  return out;
}

TheoremReport gaussian_check(int max_order, const Rat& m) {
  TheoremReport report;
  report.theorem = "gaussian-moments(hw, X1)";
  report.params = {Params{m, Rat(1)}};
  const LieAlgebraSpec alg = builtin("hw");
  const HatMap h = hat_rep(alg, Params{m, Rat(1)});
  const EnvElement x1 = catalog_observable(alg, "X1", Params{m, Rat(1)});

  // Characteristic-function route: phi(s) = e^{-s^2 m / 2} carries
  // coefficient (-1)^k mu_{2k} / (2k)! at s^{2k}.
  const std::vector<std::string> svar{"s"};
  const MultiSeries phi = series_exp(
      Rat(-m / 2) *
      series_mul(MultiSeries::var(svar, max_order, "s"),
                 MultiSeries::var(svar, max_order, "s")));

  for (int n = 0; n <= max_order; ++n) {
    const Rat mu = moment(h, x1, n);
    CheckItem item;
    std::vector<int> expo{n};
    const Rat phi_coeff = phi.coeff(expo);
    if (n % 2) {
      item.description = "moment " + std::to_string(n) + " vanishes";
      item.pass = mu == 0 && phi_coeff == 0;
      if (!item.pass) item.detail = "got " + rat_str(mu);
    } else {
      const int k = n / 2;
      Rat expected = double_factorial_odd(n);
      for (int i = 0; i < k; ++i) expected *= m;
      const Rat sign = k % 2 ? Rat(-1) : Rat(1);
      item.description = "moment " + std::to_string(n) + " = m^" +
                         std::to_string(k) + " (" + std::to_string(n) +
                         "-1)!! and matches e^{-s^2 m/2}";
      item.pass = mu == expected && phi_coeff == sign * mu / factorial(n);
      if (!item.pass)
        item.detail = "got " + rat_str(mu) + ", want " + rat_str(expected) +
                      " (phi coefficient " + rat_str(phi_coeff) + ")";
    }
    report.checks.push_back(item);
  }
  return report;
}

std::string hankel_observable(const LieAlgebraSpec& alg) {
  if (alg.name == "hw") return "X1";
  if (alg.name == "sl2") return "X2";
  if (alg.name == "schrodinger") return "X2";
  throw Error("no-hat-representation",
              "no distinguished observable for algebra '" + alg.name + "'");
}

std::vector<Rat> leading_minors(const std::vector<std::vector<Rat>>& matrix) {
  const size_t n = matrix.size();
  std::vector<Rat> minors;
  for (size_t k = 1; k <= n; ++k) {
    // Exact Gaussian elimination on the leading k x k block.
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) a[i][j] = matrix[i][j];
    Rat det(1);
    for (size_t col = 0; col < k && det != 0; ++col) {
      size_t pivot = col;
      while (pivot < k && a[pivot][col] == 0) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (size_t row = col + 1; row < k; ++row) {
        if (a[row][col] == 0) continue;
        const Rat f = a[row][col] / a[col][col];
        for (size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
      }
    }
    minors.push_back(det);
  }
  return minors;
}

TheoremReport hankel_positivity(const LieAlgebraSpec& alg,
                                const std::string& op, const Params& p,
                                int order) {
  TheoremReport report;
  report.theorem = "hankel(" + alg.name + ", " + op + ")";
  report.params = {p};
  const HatMap h = hat_rep(alg, p);
  const EnvElement x = catalog_observable(alg, op, p);
  std::vector<Rat> mu(2 * order + 1);
  for (int n = 0; n <= 2 * order; ++n) mu[n] = moment(h, x, n);
  std::vector<std::vector<Rat>> hankel(order + 1,
                                       std::vector<Rat>(order + 1));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order; ++j) hankel[i][j] = mu[i + j];
  const std::vector<Rat> minors = leading_minors(hankel);
  for (size_t k = 0; k < minors.size(); ++k) {
    CheckItem item;
    item.description = "leading minor " + std::to_string(k + 1) + " = " +
                       rat_str(minors[k]) + " >= 0";
    item.pass = minors[k] >= 0;
    if (!item.pass) item.detail = rat_str(minors[k]);
    report.checks.push_back(item);
  }
  return report;
}

TheoremReport gram_psd(const LieAlgebraSpec& alg, const Params& p,
                       int degree) {
  TheoremReport report;
  report.theorem = "gram-psd(" + alg.name + ", weighted degree <= " +
                   std::to_string(degree) + ")";
  report.params = {p};
  const HatMap h = hat_rep(alg, p);
  const std::vector<int> weights =
      h.pairs == 2 ? std::vector<int>{2, 1} : std::vector<int>{1};

  // Graded basis, ordered by (weighted degree, index) for determinism.
  std::vector<std::vector<int>> states;
  std::vector<int> cur(h.pairs, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == h.pairs) {
      states.push_back(cur);
      return;
    }
    for (int k = 0; k * weights[pos] <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k * weights[pos]);
    }
    cur[pos] = 0;
  };
  rec(0, degree);
  auto weight = [&](const std::vector<int>& s) {
    int w = 0;
    for (size_t i = 0; i < s.size(); ++i) w += weights[i] * s[i];
    return w;
  };
  std::sort(states.begin(), states.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
            });

  const auto matrix = gram_matrix(h, states);

  // Graded sparsity: different weighted degrees never pair.
  {
    CheckItem item;
    item.description = "gram(alpha, beta) = 0 unless equal weighted degrees";
    item.pass = true;
    for (size_t i = 0; i < states.size() && item.pass; ++i)
      for (size_t j = 0; j < states.size(); ++j)
        if (weight(states[i]) != weight(states[j]) && matrix[i][j] != 0) {
          item.pass = false;
          item.detail = "nonzero pairing of " +
                        FockVector::basis(h.pairs, states[i]).str() + " and " +
                        FockVector::basis(h.pairs, states[j]).str();
          break;
        }
    report.checks.push_back(item);
  }

  const std::vector<Rat> minors = leading_minors(matrix);
  for (size_t k = 0; k < minors.size(); ++k) {
    CheckItem item;
    item.description = "leading minor " + std::to_string(k + 1) + " = " +
                       rat_str(minors[k]) + " >= 0";
    item.pass = minors[k] >= 0;
    if (!item.pass) item.detail = rat_str(minors[k]);
    report.checks.push_back(item);
  }
  return report;
}

}  // namespace bkit
