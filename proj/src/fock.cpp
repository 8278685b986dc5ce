#include "bkit/fock.hpp"

#include <numeric>

namespace bkit {

static int total_degree(const std::vector<int>& index) {
  return std::accumulate(index.begin(), index.end(), 0);
}

FockVector FockVector::vacuum(int pairs) {
  return basis(pairs, std::vector<int>(pairs, 0));
}

FockVector FockVector::basis(int pairs, const std::vector<int>& index) {
  FockVector s{pairs, {}, false};
  s.add_entry(index, Rat(1));
  return s;
}

FockVector& FockVector::add_entry(const std::vector<int>& index,
                                  const Rat& coeff) {
  if (static_cast<int>(index.size()) != pairs)
    throw Error("pair-mismatch", "index length does not match pair count");
  for (int k : index)
    if (k < 0) throw Error("bad-argument", "negative Fock index");
  if (coeff == 0) return *this;
  auto it = entries.find(index);
  if (it == entries.end()) {
    entries.emplace(index, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) entries.erase(it);
  }
  return *this;
}

std::string FockVector::str() const {
  if (entries.empty()) return "0";
  std::string out;
  for (const auto& [index, coeff] : entries) {
    if (!out.empty()) out += " + ";
    std::string ket = "|";
    for (size_t i = 0; i < index.size(); ++i)
      ket += (i ? "," : "") + std::to_string(index[i]);
    ket += ">";
    out += (coeff == 1 ? "" : rat_str(coeff) + " ") + ket;
  }
  return out;
}

Json FockVector::to_json() const {
  Json arr = Json::array();
  for (const auto& [index, coeff] : entries)
    arr.push_back(Json{{"index", index}, {"coeff", rat_str(coeff)}});
  return arr;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  if (a.pairs != b.pairs)
    throw Error("pair-mismatch", "adding states over different pair counts");
  FockVector out = a;
  out.truncated = a.truncated || b.truncated;
  for (const auto& [k, c] : b.entries) out.add_entry(k, c);
  return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  if (a.pairs != b.pairs)
    throw Error("pair-mismatch", "subtracting states over different pair counts");
  FockVector out = a;
  out.truncated = a.truncated || b.truncated;
  for (const auto& [k, c] : b.entries) out.add_entry(k, -c);
  return out;
}

FockVector operator*(const Rat& s, const FockVector& a) {
  FockVector out{a.pairs, {}, a.truncated};
  if (s == 0) return out;
  for (const auto& [k, c] : a.entries) out.entries.emplace(k, s * c);
  return out;
}

bool operator==(const FockVector& a, const FockVector& b) {
  return a.pairs == b.pairs && a.entries == b.entries;
}

FockVector apply(const WeylPoly& op, const FockVector& state,
                 const TruncationPolicy& policy) {
  if (op.pairs != state.pairs)
    throw Error("pair-mismatch", "operator and state pair counts differ");
  const int n = state.pairs;
  FockVector out{n, {}, state.truncated};
  for (const auto& [index, amp] : state.entries)
    for (const auto& [key, coeff] : op.terms) {
      // R^a V^b |k> = (falling factorials) |k - b + a>.
      Rat factor = amp * coeff;
      std::vector<int> target(n);
      bool killed = false;
      for (int i = 0; i < n && !killed; ++i) {
        const int a = key[i], b = key[n + i], k = index[i];
        if (k < b) {
          killed = true;
          break;
        }
        for (int step = 0; step < b; ++step) factor *= k - step;
        target[i] = k - b + a;
      }
      if (killed) continue;
      if (total_degree(target) > policy.max_degree) {
        out.truncated = true;
        continue;
      }
      out.add_entry(target, factor);
    }
  return out;
}

Rat vacuum_component(const FockVector& state) {
  auto it = state.entries.find(std::vector<int>(state.pairs, 0));
  return it == state.entries.end() ? Rat(0) : it->second;
}

AdjointMap default_adjoint(const LieAlgebraSpec& alg) {
  AdjointMap adj;
  if (alg.name == "hw") {
    adj.lowering_of = {{"X", "P"}};
  } else if (alg.name == "sl2") {
    adj.lowering_of = {{"R", "L"}};
  } else if (alg.name == "schrodinger") {
    adj.lowering_of = {{"K", "P_t"}, {"G", "P_x"}};
  } else {
    throw Error("no-adjoint",
                "no built-in adjoint assignment for algebra '" + alg.name + "'");
  }
  return adj;
}

std::vector<std::string> raising_generators(const LieAlgebraSpec& alg) {
  if (alg.name == "hw") return {"X"};
  if (alg.name == "sl2") return {"R"};
  if (alg.name == "schrodinger") return {"K", "G"};
  throw Error("no-adjoint",
              "no built-in raising generators for algebra '" + alg.name + "'");
}

Rat gram(const HatMap& h, const AdjointMap& adj, const std::vector<int>& alpha,
         const std::vector<int>& beta, const TruncationPolicy& policy) {
  const auto raising = raising_generators(h.algebra);
  if (alpha.size() != raising.size() || beta.size() != raising.size())
    throw Error("pair-mismatch", "multi-index length does not match pair count");

  // Worst-case intermediate degree: |beta| plus the raise each lowering
  // application may contribute.
  int required = total_degree(beta);
  int running = required;
  for (size_t i = 0; i < raising.size(); ++i) {
    const auto& lname = adj.lowering_of.at(raising[i]);
    const int raise = hat_of(h, EnvElement::gen(lname)).degree_raise();
    for (int rep = 0; rep < alpha[i]; ++rep) {
      running += raise;
      required = std::max(required, running);
    }
  }
  if (policy.max_degree < required)
    throw Error("truncation-insufficient",
                "gram contraction needs degree " + std::to_string(required) +
                    ", policy allows " + std::to_string(policy.max_degree));

  FockVector state = FockVector::basis(h.pairs, beta);
  // (R^alpha)* applied left-to-right: lowering word for pair 1 acts first.
  for (size_t i = 0; i < raising.size(); ++i) {
    const WeylPoly low = hat_of(h, EnvElement::gen(adj.lowering_of.at(raising[i])));
    for (int rep = 0; rep < alpha[i]; ++rep) state = apply(low, state, policy);
  }
  if (state.truncated)
    throw Error("truncation-insufficient",
                "gram contraction exceeded the truncation policy");
  return vacuum_component(state);
}

Rat gram(const HatMap& h, const std::vector<int>& alpha,
         const std::vector<int>& beta) {
  TruncationPolicy policy;
  int degree = 0;
  for (int b : beta) degree += b;
  for (int a : alpha) degree += a;  // generous: adjoints may keep degree
  policy.max_degree = degree + policy.margin;
  return gram(h, default_adjoint(h.algebra), alpha, beta, policy);
}

std::vector<std::vector<Rat>> gram_matrix(
    const HatMap& h, const std::vector<std::vector<int>>& states) {
  std::vector<std::vector<Rat>> out(states.size(),
                                    std::vector<Rat>(states.size()));
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = 0; j < states.size(); ++j)
      out[i][j] = gram(h, states[i], states[j]);
  return out;
}

Rat moment(const HatMap& h, const EnvElement& x, int n,
           const TruncationPolicy& policy) {
  if (n < 0) throw Error("bad-argument", "negative moment order");
  const WeylPoly op = hat_of(h, x);
  const int required = n * op.degree_raise();
  if (policy.max_degree < required)
    throw Error("truncation-insufficient",
                "moment of order " + std::to_string(n) + " needs degree " +
                    std::to_string(required) + ", policy allows " +
                    std::to_string(policy.max_degree));
  FockVector state = FockVector::vacuum(h.pairs);
  for (int i = 0; i < n; ++i) state = apply(op, state, policy);
  if (state.truncated)
    throw Error("truncation-insufficient",
                "moment computation exceeded the truncation policy");
  return vacuum_component(state);
}

Rat moment(const HatMap& h, const EnvElement& x, int n) {
  TruncationPolicy policy;
  policy.max_degree = n * hat_of(h, x).degree_raise() + policy.margin;
  return moment(h, x, n, policy);
}

}  // namespace bkit
