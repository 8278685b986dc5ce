#include "bkit/weyl.hpp"

#include <algorithm>

namespace bkit {

static void check_key(int pairs, const std::vector<int>& key) {
  if (static_cast<int>(key.size()) != 2 * pairs)
    throw Error("pair-mismatch", "exponent key does not match pair count");
  for (int e : key)
    if (e < 0) throw Error("bad-argument", "negative exponent");
}

WeylPoly WeylPoly::zero(int pairs) { return WeylPoly{pairs, {}}; }

WeylPoly WeylPoly::constant(int pairs, const Rat& value) {
  WeylPoly p{pairs, {}};
  p.add_term(std::vector<int>(2 * pairs, 0), value);
  return p;
}

WeylPoly WeylPoly::r(int pairs, int index) {
  WeylPoly p{pairs, {}};
  std::vector<int> key(2 * pairs, 0);
  key[index - 1] = 1;
  p.add_term(key, Rat(1));
  return p;
}

WeylPoly WeylPoly::v(int pairs, int index) {
  WeylPoly p{pairs, {}};
  std::vector<int> key(2 * pairs, 0);
  key[pairs + index - 1] = 1;
  p.add_term(key, Rat(1));
  return p;
}

WeylPoly WeylPoly::monomial(int pairs, const std::vector<int>& r_exps,
                            const std::vector<int>& v_exps, const Rat& coeff) {
  if (static_cast<int>(r_exps.size()) != pairs ||
      static_cast<int>(v_exps.size()) != pairs)
    throw Error("pair-mismatch", "exponent lists do not match pair count");
  std::vector<int> key = r_exps;
  key.insert(key.end(), v_exps.begin(), v_exps.end());
  WeylPoly p{pairs, {}};
  p.add_term(key, coeff);
  return p;
}

WeylPoly& WeylPoly::add_term(const std::vector<int>& key, const Rat& coeff) {
  check_key(pairs, key);
  if (coeff == 0) return *this;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

int WeylPoly::degree_raise() const {
  int raise = 0;
  for (const auto& [key, coeff] : terms) {
    (void)coeff;
    int d = 0;
    for (int i = 0; i < pairs; ++i) d += key[i] - key[pairs + i];
    raise = std::max(raise, d);
  }
  return raise;
}

std::string WeylPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto append = [&](const std::string& letter, int index, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += " ";
      mono += letter + std::to_string(index);
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    for (int i = 0; i < pairs; ++i) append("R", i + 1, key[i]);
    for (int i = 0; i < pairs; ++i) append("V", i + 1, key[pairs + i]);
    if (mono.empty())
      out += rat_str(coeff);
    else if (coeff == 1)
      out += mono;
    else
      out += rat_str(coeff) + " " + mono;
  }
  return out;
}

Json WeylPoly::to_json() const {
  Json arr = Json::array();
  for (const auto& [key, coeff] : terms) {
    std::vector<int> r_exps(key.begin(), key.begin() + pairs);
    std::vector<int> v_exps(key.begin() + pairs, key.end());
    arr.push_back(Json{
        {"coeff", rat_str(coeff)}, {"r_exps", r_exps}, {"v_exps", v_exps}});
  }
  return arr;
}

WeylPoly operator+(const WeylPoly& a, const WeylPoly& b) {
  if (a.pairs != b.pairs)
    throw Error("pair-mismatch", "adding Weyl elements over different pair counts");
  WeylPoly out = a;
  for (const auto& [k, c] : b.terms) out.add_term(k, c);
  return out;
}

WeylPoly operator-(const WeylPoly& a, const WeylPoly& b) {
  if (a.pairs != b.pairs)
    throw Error("pair-mismatch", "subtracting Weyl elements over different pair counts");
  WeylPoly out = a;
  for (const auto& [k, c] : b.terms) out.add_term(k, -c);
  return out;
}

WeylPoly operator*(const Rat& s, const WeylPoly& a) {
  WeylPoly out{a.pairs, {}};
  if (s == 0) return out;
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, s * c);
  return out;
}

bool operator==(const WeylPoly& a, const WeylPoly& b) {
  return a.pairs == b.pairs && a.terms == b.terms;
}

// V^b R^a = sum_k k! C(a,k) C(b,k) R^(a-k) V^(b-k), per pair independently.
WeylPoly weyl_mul(const WeylPoly& a, const WeylPoly& b) {
  if (a.pairs != b.pairs)
    throw Error("pair-mismatch", "multiplying Weyl elements over different pair counts");
  const int n = a.pairs;
  WeylPoly out{n, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      // Contract the V block of a against the R block of b.
      std::vector<int> k(n, 0);
      while (true) {
        Rat factor = ca * cb;
        std::vector<int> key(2 * n, 0);
        for (int i = 0; i < n; ++i) {
          factor *= factorial(k[i]) * binomial(ka[n + i], k[i]) *
                    binomial(kb[i], k[i]);
          key[i] = ka[i] + kb[i] - k[i];
          key[n + i] = ka[n + i] + kb[n + i] - k[i];
        }
        out.add_term(key, factor);
        int j = 0;
        for (; j < n; ++j) {
          if (k[j] < std::min(ka[n + j], kb[j])) {
            ++k[j];
            break;
          }
          k[j] = 0;
        }
        if (j == n) break;
      }
    }
  return out;
}

WeylPoly weyl_commutator(const WeylPoly& a, const WeylPoly& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

HatMap hat_rep(const LieAlgebraSpec& alg, const Params& params) {
  HatMap h;
  h.algebra = alg;
  h.params = params;
  const Rat& m = params.m;
  const Rat& c = params.c;
  if (alg.name == "hw") {
    h.pairs = 1;
    h.images["H"] = WeylPoly::constant(1, m);
    h.images["X"] = WeylPoly::r(1, 1);
    h.images["P"] = m * WeylPoly::v(1, 1);
    return h;
  }
  if (alg.name == "sl2") {
    h.pairs = 1;
    h.images["rho"] = WeylPoly::constant(1, c) +
                      Rat(2) * WeylPoly::monomial(1, {1}, {1}, Rat(1));
    h.images["R"] = WeylPoly::r(1, 1);
    h.images["L"] =
        c * WeylPoly::v(1, 1) + WeylPoly::monomial(1, {1}, {2}, Rat(1));
    return h;
  }
  if (alg.name == "schrodinger") {
    h.pairs = 2;
    h.images["M"] = WeylPoly::constant(2, m);
    h.images["K"] = WeylPoly::r(2, 1);
    h.images["G"] = WeylPoly::r(2, 2);
    h.images["D"] = WeylPoly::constant(2, c) +
                    Rat(2) * WeylPoly::monomial(2, {1, 0}, {1, 0}, Rat(1)) +
                    WeylPoly::monomial(2, {0, 1}, {0, 1}, Rat(1));
    h.images["P_x"] =
        m * WeylPoly::v(2, 2) + WeylPoly::monomial(2, {0, 1}, {1, 0}, Rat(1));
    h.images["P_t"] = c * WeylPoly::v(2, 1) +
                      Rat(m / 2) * WeylPoly::monomial(2, {0, 0}, {0, 2}, Rat(1)) +
                      WeylPoly::monomial(2, {1, 0}, {2, 0}, Rat(1)) +
                      WeylPoly::monomial(2, {0, 1}, {1, 1}, Rat(1));
    return h;
  }
  throw Error("no-hat-representation",
              "no built-in Weyl realization for algebra '" + alg.name + "'");
}

WeylPoly hat_of(const HatMap& h, const EnvElement& x) {
  WeylPoly out = WeylPoly::zero(h.pairs);
  for (const auto& [word, coeff] : x.terms) {
    WeylPoly prod = WeylPoly::constant(h.pairs, Rat(1));
    for (const auto& gname : word) {
      auto it = h.images.find(gname);
      if (it == h.images.end())
        throw Error("unknown-generator",
                    "no image for generator '" + gname + "'");
      prod = weyl_mul(prod, it->second);
    }
    out = out + coeff * prod;
  }
  return out;
}

Report check_homomorphism(const HatMap& h) {
  Report report;
  report.subject = "homomorphism(" + h.algebra.name + ")";
  const auto& basis = h.algebra.basis;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const WeylPoly lhs = weyl_commutator(hat_of(h, EnvElement::gen(basis[i])),
                                           hat_of(h, EnvElement::gen(basis[j])));
      const WeylPoly rhs = hat_of(
          h, h.algebra.basis_bracket(static_cast<int>(i), static_cast<int>(j)));
      const WeylPoly residual = lhs - rhs;
      CheckItem item;
      item.description = "[" + basis[i] + ", " + basis[j] + "]";
      item.pass = residual.is_zero();
      if (!item.pass) item.detail = residual.str();
      report.checks.push_back(item);
    }
  return report;
}

std::pair<DecoupledTriple, Report> decoupled_generators(const HatMap& h) {
  if (h.algebra.name != "schrodinger")
    throw Error("no-decoupling",
                "decoupled generators are defined for the schrodinger algebra only");
  if (h.params.m == 0)
    throw Error("m-zero",
                "m must be nonzero: the decoupled generators involve 1/(2m)");
  const Rat& m = h.params.m;
  const Rat& c = h.params.c;
  const WeylPoly& pt = h.images.at("P_t");
  const WeylPoly& px = h.images.at("P_x");
  const WeylPoly& k = h.images.at("K");
  const WeylPoly& g = h.images.at("G");
  const WeylPoly& d = h.images.at("D");

  DecoupledTriple t;
  t.l0 = pt - Rat(1 / (2 * m)) * weyl_mul(px, px);
  t.r0 = k - Rat(1 / (2 * m)) * weyl_mul(g, g);
  t.rho0 = d - Rat(1 / m) * weyl_mul(g, px) -
           WeylPoly::constant(2, Rat(1, 2));

  // Closed forms in terms of R0' = R1 - R2^2/(2m).
  const WeylPoly r0p =
      WeylPoly::r(2, 1) -
      Rat(1 / (2 * m)) * WeylPoly::monomial(2, {0, 2}, {0, 0}, Rat(1));
  const WeylPoly v1 = WeylPoly::v(2, 1);
  const Rat shift = c - Rat(1, 2);
  const WeylPoly l0_closed =
      shift * v1 + weyl_mul(r0p, weyl_mul(v1, v1));
  const WeylPoly rho0_closed =
      WeylPoly::constant(2, shift) + Rat(2) * weyl_mul(r0p, v1);

  Report report;
  report.subject = "decoupled-generators(schrodinger)";
  auto check = [&](const std::string& desc, const WeylPoly& got,
                   const WeylPoly& want) {
    CheckItem item;
    item.description = desc;
    item.pass = got == want;
    if (!item.pass) item.detail = "got " + got.str() + ", want " + want.str();
    report.checks.push_back(item);
  };
  check("P_t - P_x^2/(2m) = (c - 1/2) V1 + R0 V1^2", t.l0, l0_closed);
  check("K - G^2/(2m) = R0", t.r0, r0p);
  check("D - G P_x/m - 1/2 = (c - 1/2) + 2 R0 V1", t.rho0, rho0_closed);
  return {t, report};
}

}  // namespace bkit
