#include "bkit/series.hpp"

#include <algorithm>
#include <numeric>

namespace bkit {

static int total_degree(const std::vector<int>& expo) {
  return std::accumulate(expo.begin(), expo.end(), 0);
}

static void require_compatible(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars != b.vars)
    throw Error("series-mismatch", "series over different variable lists");
  if (a.cap != b.cap)
    throw Error("series-mismatch",
                "series with different caps (" + std::to_string(a.cap) + " vs " +
                    std::to_string(b.cap) + "); truncate first");
}

MultiSeries MultiSeries::zero(const std::vector<std::string>& vars, int cap) {
  if (cap < 0) throw Error("bad-argument", "negative series cap");
  return MultiSeries{vars, cap, {}};
}

MultiSeries MultiSeries::constant(const std::vector<std::string>& vars, int cap,
                                  const Rat& value) {
  MultiSeries s = zero(vars, cap);
  s.add_term(std::vector<int>(vars.size(), 0), value);
  return s;
}

MultiSeries MultiSeries::var(const std::vector<std::string>& vars, int cap,
                             const std::string& name) {
  MultiSeries s = zero(vars, cap);
  std::vector<int> expo(vars.size(), 0);
  const int i = s.var_index(name);
  if (i < 0)
    throw Error("series-mismatch", "variable '" + name + "' not in series");
  expo[i] = 1;
  s.add_term(expo, Rat(1));
  return s;
}

Rat MultiSeries::coeff(const std::vector<int>& expo) const {
  auto it = coeffs.find(expo);
  return it == coeffs.end() ? Rat(0) : it->second;
}

MultiSeries& MultiSeries::add_term(const std::vector<int>& expo,
                                   const Rat& c) {
  if (expo.size() != vars.size())
    throw Error("series-mismatch", "exponent length does not match variables");
  for (int e : expo)
    if (e < 0) throw Error("bad-argument", "negative exponent");
  if (c == 0 || total_degree(expo) > cap) return *this;
  auto it = coeffs.find(expo);
  if (it == coeffs.end()) {
    coeffs.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  return *this;
}

int MultiSeries::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

std::string monomial_key(const std::vector<std::string>& vars,
                         const std::vector<int>& expo) {
  std::string out;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (expo[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += vars[i];
    if (expo[i] > 1) out += "^" + std::to_string(expo[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiSeries::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [expo, c] : coeffs) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_key(vars, expo);
    if (mono == "1")
      out += rat_str(c);
    else if (c == 1)
      out += mono;
    else
      out += rat_str(c) + " " + mono;
  }
  return out;
}

Json MultiSeries::to_json() const {
  Json arr = Json::array();
  for (const auto& [expo, c] : coeffs) {
    Json exps = Json::object();
    for (size_t i = 0; i < vars.size(); ++i)
      exps[vars[i]] = expo[i];
    arr.push_back(Json{{"exps", exps}, {"coeff", rat_str(c)}});
  }
  return arr;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  MultiSeries out = a;
  for (const auto& [e, c] : b.coeffs) out.add_term(e, c);
  return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  MultiSeries out = a;
  for (const auto& [e, c] : b.coeffs) out.add_term(e, -c);
  return out;
}

MultiSeries operator*(const Rat& s, const MultiSeries& a) {
  MultiSeries out = MultiSeries::zero(a.vars, a.cap);
  if (s == 0) return out;
  for (const auto& [e, c] : a.coeffs) out.coeffs.emplace(e, s * c);
  return out;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.vars == b.vars && a.cap == b.cap && a.coeffs == b.coeffs;
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  MultiSeries out = MultiSeries::zero(a.vars, a.cap);
  for (const auto& [ea, ca] : a.coeffs) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.coeffs) {
      if (da + total_degree(eb) > a.cap) continue;
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiSeries series_div(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  const Rat b0 = b.coeff(std::vector<int>(b.vars.size(), 0));
  if (b0 == 0)
    throw Error("division-by-nonunit",
                "series division needs a nonzero constant term");
  // b = b0 (1 + x); 1/b = (1/b0) sum (-x)^k.
  MultiSeries x = Rat(1 / b0) * b;
  x.add_term(std::vector<int>(b.vars.size(), 0), Rat(-1));
  MultiSeries inv = MultiSeries::constant(b.vars, b.cap, Rat(1));
  MultiSeries xk = MultiSeries::constant(b.vars, b.cap, Rat(1));
  for (int k = 1; k <= b.cap; ++k) {
    xk = series_mul(xk, x);
    if (xk.is_zero()) break;
    inv = k % 2 ? inv - xk : inv + xk;
  }
  return series_mul(a, Rat(1 / b0) * inv);
}

MultiSeries series_exp(const MultiSeries& a) {
  if (a.coeff(std::vector<int>(a.vars.size(), 0)) != 0)
    throw Error("exp-nonzero-constant",
                "series exp needs a zero constant term");
  MultiSeries out = MultiSeries::constant(a.vars, a.cap, Rat(1));
  MultiSeries ak = MultiSeries::constant(a.vars, a.cap, Rat(1));
  for (int k = 1; k <= a.cap; ++k) {
    ak = series_mul(ak, a);
    if (ak.is_zero()) break;
    out = out + Rat(1 / factorial(k)) * ak;
  }
  return out;
}

MultiSeries series_log(const MultiSeries& a) {
  if (a.coeff(std::vector<int>(a.vars.size(), 0)) != 1)
    throw Error("log-nonunit", "series log needs constant term one");
  MultiSeries x = a;
  x.add_term(std::vector<int>(a.vars.size(), 0), Rat(-1));
  MultiSeries out = MultiSeries::zero(a.vars, a.cap);
  MultiSeries xk = MultiSeries::constant(a.vars, a.cap, Rat(1));
  for (int k = 1; k <= a.cap; ++k) {
    xk = series_mul(xk, x);
    if (xk.is_zero()) break;
    out = out + Rat(Rat(k % 2 ? 1 : -1) / k) * xk;
  }
  return out;
}

MultiSeries series_pow(const MultiSeries& base, const Rat& exponent) {
  if (exponent.get_den() == 1) {
    if (!exponent.get_num().fits_slong_p())
      throw Error("bad-argument", "series power exponent too large");
    long n = exponent.get_num().get_si();
    MultiSeries acc = MultiSeries::constant(base.vars, base.cap, Rat(1));
    const MultiSeries factor =
        n >= 0 ? base : series_div(acc, base);  // acc is one here
    for (long i = 0; i < (n >= 0 ? n : -n); ++i) acc = series_mul(acc, factor);
    return acc;
  }
  return series_exp(exponent * series_log(base));
}

MultiSeries series_deriv(const MultiSeries& a, const std::string& var) {
  const int j = a.var_index(var);
  if (j < 0)
    throw Error("series-mismatch", "variable '" + var + "' not in series");
  MultiSeries out = MultiSeries::zero(a.vars, std::max(0, a.cap - 1));
  for (const auto& [expo, c] : a.coeffs) {
    if (expo[j] == 0) continue;
    std::vector<int> e = expo;
    e[j] -= 1;
    out.add_term(e, Rat(expo[j]) * c);
  }
  return out;
}

MultiSeries truncate(const MultiSeries& a, int new_cap) {
  if (new_cap > a.cap)
    throw Error("bad-argument",
                "cannot raise a series cap (exactness is only known up to " +
                    std::to_string(a.cap) + ")");
  MultiSeries out = MultiSeries::zero(a.vars, new_cap);
  for (const auto& [expo, c] : a.coeffs)
    if (total_degree(expo) <= new_cap) out.coeffs.emplace(expo, c);
  return out;
}

MultiSeries swap_wv(const MultiSeries& a) {
  std::vector<int> perm(a.vars.size());
  for (size_t i = 0; i < a.vars.size(); ++i) {
    const std::string& name = a.vars[i];
    if (name[0] == 'w' || name[0] == 'v') {
      std::string partner = (name[0] == 'w' ? "v" : "w") + name.substr(1);
      const int j = a.var_index(partner);
      if (j < 0)
        throw Error("series-mismatch",
                    "swap needs partner variable '" + partner + "'");
      perm[i] = j;
    } else {
      perm[i] = static_cast<int>(i);
    }
  }
  MultiSeries out = MultiSeries::zero(a.vars, a.cap);
  for (const auto& [expo, c] : a.coeffs) {
    std::vector<int> e(expo.size());
    for (size_t i = 0; i < expo.size(); ++i) e[perm[i]] = expo[i];
    out.coeffs.emplace(std::move(e), c);
  }
  return out;
}

std::vector<Mismatch> series_compare(const MultiSeries& a, const MultiSeries& b,
                                     int limit) {
  if (a.vars != b.vars)
    throw Error("series-mismatch", "comparing series over different variables");
  const int bound = std::min({limit, a.cap, b.cap});
  std::map<std::vector<int>, bool> keys;
  for (const auto& [e, c] : a.coeffs) keys.emplace(e, true);
  for (const auto& [e, c] : b.coeffs) keys.emplace(e, true);
  std::vector<std::vector<int>> diff;
  for (const auto& [e, unused] : keys) {
    (void)unused;
    if (total_degree(e) > bound) continue;
    if (a.coeff(e) != b.coeff(e)) diff.push_back(e);
  }
  std::sort(diff.begin(), diff.end(), [](const auto& x, const auto& y) {
    const int dx = total_degree(x), dy = total_degree(y);
    return dx != dy ? dx < dy : x < y;
  });
  std::vector<Mismatch> out;
  for (const auto& e : diff)
    out.push_back(Mismatch{monomial_key(a.vars, e), rat_str(a.coeff(e)),
                           rat_str(b.coeff(e))});
  return out;
}

std::vector<std::string> series_vars(const LieAlgebraSpec& alg) {
  if (alg.name == "schrodinger") return {"w1", "w2", "v1", "v2"};
  if (alg.name == "hw" || alg.name == "sl2") return {"w1", "v1"};
  throw Error("no-hat-representation",
              "no series variables for algebra '" + alg.name + "'");
}

MultiSeries closed_form_leibniz(const LieAlgebraSpec& alg, const Params& p,
                                int cap) {
  const auto vars = series_vars(alg);
  auto V = [&](const std::string& n) { return MultiSeries::var(vars, cap, n); };
  if (alg.name == "hw") return series_exp(p.m * series_mul(V("w1"), V("v1")));
  if (alg.name == "sl2") {
    MultiSeries u = MultiSeries::constant(vars, cap, Rat(1)) -
                    series_mul(V("w1"), V("v1"));
    return series_pow(u, -p.c);
  }
  // schrodinger
  MultiSeries u = MultiSeries::constant(vars, cap, Rat(1)) -
                  series_mul(V("w1"), V("v1"));
  MultiSeries q = series_mul(V("w1"), series_mul(V("v2"), V("v2"))) +
                  Rat(2) * series_mul(V("w2"), V("v2")) +
                  series_mul(series_mul(V("w2"), V("w2")), V("v1"));
  return series_mul(series_pow(u, -p.c),
                    series_exp(Rat(p.m / 2) * series_div(q, u)));
}

std::vector<std::string> berezin_catalog(const LieAlgebraSpec& alg) {
  if (alg.name == "hw") return {"H", "X", "P", "X1"};
  if (alg.name == "sl2") return {"rho", "R", "L", "X2"};
  if (alg.name == "schrodinger")
    return {"M", "K", "G", "D", "P_x", "P_t", "X1", "X2", "L0", "R0", "rho0"};
  throw Error("no-hat-representation",
              "no Berezin catalog for algebra '" + alg.name + "'");
}

static Error unknown_op(const LieAlgebraSpec& alg, const std::string& op) {
  std::string names;
  for (const auto& n : berezin_catalog(alg))
    names += (names.empty() ? "" : ", ") + n;
  return Error("unknown-operator", "unknown operator '" + op + "' for " +
                                       alg.name + " (available: " + names + ")");
}

MultiSeries closed_form_berezin(const LieAlgebraSpec& alg,
                                const std::string& op, const Params& p,
                                int cap) {
  const auto vars = series_vars(alg);
  auto V = [&](const std::string& n) { return MultiSeries::var(vars, cap, n); };
  auto C = [&](const Rat& r) { return MultiSeries::constant(vars, cap, r); };
  const Rat& m = p.m;
  const Rat& c = p.c;
  if (alg.name == "hw") {
    if (op == "X") return m * V("w1");
    if (op == "P") return m * V("v1");
    if (op == "H") return C(m);
    if (op == "X1") return m * (V("w1") + V("v1"));
    throw unknown_op(alg, op);
  }
  if (alg.name == "sl2") {
    MultiSeries u = C(Rat(1)) - series_mul(V("w1"), V("v1"));
    if (op == "R") return series_div(c * V("w1"), u);
    if (op == "L") return series_div(c * V("v1"), u);
    if (op == "rho")
      return series_div(c * (C(Rat(1)) + series_mul(V("w1"), V("v1"))), u);
    if (op == "X2")
      return series_div(
          c * series_mul(C(Rat(1)) + V("w1"), C(Rat(1)) + V("v1")), u);
    throw unknown_op(alg, op);
  }
  if (alg.name != "schrodinger") throw unknown_op(alg, op);
  MultiSeries u = C(Rat(1)) - series_mul(V("w1"), V("v1"));
  MultiSeries a = series_div(series_mul(V("w2"), V("v1")) + V("v2"), u);
  MultiSeries b = series_div(V("w2") + series_mul(V("w1"), V("v2")), u);
  const Rat half_m = m / 2;
  const Rat shift = c - Rat(1, 2);
  if (op == "M") return C(m);
  if (op == "K")
    return series_div(c * V("w1"), u) + half_m * series_mul(b, b);
  if (op == "G") return m * b;
  if (op == "D")
    return series_div(c * (C(Rat(1)) + series_mul(V("w1"), V("v1"))), u) +
           m * series_mul(a, b);
  if (op == "P_x") return m * a;
  if (op == "P_t")
    return series_div(c * V("v1"), u) + half_m * series_mul(a, a);
  if (op == "X1")
    return series_div(
               c * series_mul(C(Rat(1)) + V("w1"), C(Rat(1)) + V("v1")), u) +
           half_m * series_mul(a + b, a + b);
  if (op == "X2") return m * (a + b);
  if (op == "L0") return series_div(shift * V("v1"), u);
  if (op == "R0") return series_div(shift * V("w1"), u);
  if (op == "rho0")
    return series_div(shift * (C(Rat(1)) + series_mul(V("w1"), V("v1"))), u);
  throw unknown_op(alg, op);
}

EnvElement catalog_observable(const LieAlgebraSpec& alg, const std::string& op,
                              const Params& p) {
  if (alg.index_of(op) >= 0) return EnvElement::gen(op);
  auto g = [](const std::string& s) { return EnvElement::gen(s); };
  if (alg.name == "hw") {
    if (op == "X1") return g("X") + g("P");
  } else if (alg.name == "sl2") {
    if (op == "X2") return g("R") + g("rho") + g("L");
  } else if (alg.name == "schrodinger") {
    if (op == "X1") return g("P_t") + g("D") + g("K");
    if (op == "X2") return g("P_x") + g("G");
    if (op == "L0" || op == "R0" || op == "rho0") {
      if (p.m == 0)
        throw Error("m-zero",
                    "m must be nonzero: the decoupled generators involve 1/(2m)");
      if (op == "L0") return g("P_t") - Rat(1 / (2 * p.m)) * (g("P_x") * g("P_x"));
      if (op == "R0") return g("K") - Rat(1 / (2 * p.m)) * (g("G") * g("G"));
      return g("D") - Rat(1 / p.m) * (g("G") * g("P_x")) -
             EnvElement::unit(Rat(1, 2));
    }
  }
  throw unknown_op(alg, op);
}

}  // namespace bkit
