#include "doctest.h"

#include <random>

#include "bkit/weyl.hpp"

using namespace bkit;

namespace {

// Independent normal-ordering oracle. A monomial is a symbol sequence,
// symbol = (pair, kind) with kind 0 = R, 1 = V. Products concatenate, and
// the defining relation V_i R_i = R_i V_i + 1 is applied literally as a
// leftmost rewrite until every word is normal-ordered. This shares no code
// with weyl_mul, which uses a closed contraction formula.
struct Symbol {
  int pair;
  int kind;
};

void normalize_seq(int pairs, const std::vector<Symbol>& seq, const Rat& coeff,
                   std::map<std::vector<int>, Rat>& acc) {
  for (size_t k = 0; k + 1 < seq.size(); ++k) {
    if (seq[k].kind == 1 && seq[k + 1].kind == 0) {
      std::vector<Symbol> swapped = seq;
      std::swap(swapped[k], swapped[k + 1]);
      if (seq[k].pair == seq[k + 1].pair) {
        std::vector<Symbol> contracted;
        for (size_t t = 0; t < seq.size(); ++t)
          if (t != k && t != k + 1) contracted.push_back(seq[t]);
        normalize_seq(pairs, swapped, coeff, acc);
        normalize_seq(pairs, contracted, coeff, acc);
      } else {
        normalize_seq(pairs, swapped, coeff, acc);
      }
      return;
    }
  }
  std::vector<int> key(2 * pairs, 0);
  for (const auto& s : seq) key[s.pair - 1 + (s.kind == 1 ? pairs : 0)] += 1;
  acc[key] += coeff;
}

WeylPoly oracle_mul(const WeylPoly& a, const WeylPoly& b) {
  std::map<std::vector<int>, Rat> acc;
  auto seq_of = [&](const std::vector<int>& key) {
    std::vector<Symbol> seq;
    for (int i = 0; i < a.pairs; ++i)
      for (int t = 0; t < key[i]; ++t) seq.push_back({i + 1, 0});
    for (int i = 0; i < a.pairs; ++i)
      for (int t = 0; t < key[a.pairs + i]; ++t) seq.push_back({i + 1, 1});
    return seq;
  };
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      std::vector<Symbol> seq = seq_of(ka);
      const std::vector<Symbol> tail = seq_of(kb);
      seq.insert(seq.end(), tail.begin(), tail.end());
      normalize_seq(a.pairs, seq, ca * cb, acc);
    }
  WeylPoly out = WeylPoly::zero(a.pairs);
  for (const auto& [key, coeff] : acc) out.add_term(key, coeff);
  return out;
}

WeylPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), expd(0, 2), coeffd(-3, 3);
  WeylPoly p = WeylPoly::zero(2);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> key(4);
    for (auto& e : key) e = expd(rng);
    int c = coeffd(rng);
    if (c == 0) c = 1;
    p.add_term(key, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("defining relation of the Weyl algebra") {
  const WeylPoly R1 = WeylPoly::r(2, 1), V1 = WeylPoly::v(2, 1);
  const WeylPoly R2 = WeylPoly::r(2, 2), V2 = WeylPoly::v(2, 2);
  CHECK(weyl_mul(V1, R1) == weyl_mul(R1, V1) + WeylPoly::constant(2, 1));
  CHECK(weyl_commutator(V1, R1) == WeylPoly::constant(2, 1));
  CHECK(weyl_commutator(V1, R2).is_zero());
  CHECK(weyl_commutator(R1, R2).is_zero());
  CHECK(weyl_commutator(V2, R2) == WeylPoly::constant(2, 1));
}

TEST_CASE("product formula matches the rewrite oracle") {
  // V^b R^a = sum_k k! C(a,k) C(b,k) R^{a-k} V^{b-k}, e.g. V^2 R^2.
  const WeylPoly R = WeylPoly::r(1, 1), V = WeylPoly::v(1, 1);
  const WeylPoly R2 = weyl_mul(R, R), V2 = weyl_mul(V, V);
  WeylPoly want = WeylPoly::monomial(1, {2}, {2}, Rat(1));
  want = want + Rat(4) * WeylPoly::monomial(1, {1}, {1}, Rat(1));
  want = want + WeylPoly::constant(1, Rat(2));
  CHECK(weyl_mul(V2, R2) == want);

  std::mt19937_64 rng(20260817);
  for (int trial = 0; trial < 30; ++trial) {
    const WeylPoly a = random_poly(rng), b = random_poly(rng);
    INFO("a = " << a.str() << ", b = " << b.str());
    CHECK(weyl_mul(a, b) == oracle_mul(a, b));
  }
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 15; ++trial) {
    const WeylPoly a = random_poly(rng), b = random_poly(rng),
                   c = random_poly(rng);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
    CHECK(weyl_mul(a, b + c) == weyl_mul(a, b) + weyl_mul(a, c));
  }
}

TEST_CASE("pair-count mismatch is rejected") {
  CHECK_THROWS_AS(weyl_mul(WeylPoly::r(1, 1), WeylPoly::r(2, 1)), Error);
}

TEST_CASE("hat realizations match their defining tables") {
  const Params p{Rat(3, 2), Rat(5, 7)};

  SUBCASE("hw") {
    const HatMap h = hat_rep(builtin("hw"), p);
    CHECK(h.pairs == 1);
    CHECK(h.images.at("H") == WeylPoly::constant(1, p.m));
    CHECK(h.images.at("X") == WeylPoly::r(1, 1));
    CHECK(h.images.at("P") == p.m * WeylPoly::v(1, 1));
  }

  SUBCASE("sl2") {
    const HatMap h = hat_rep(builtin("sl2"), p);
    CHECK(h.pairs == 1);
    CHECK(h.images.at("rho") ==
          WeylPoly::constant(1, p.c) +
              Rat(2) * WeylPoly::monomial(1, {1}, {1}, Rat(1)));
    CHECK(h.images.at("R") == WeylPoly::r(1, 1));
    CHECK(h.images.at("L") ==
          p.c * WeylPoly::v(1, 1) + WeylPoly::monomial(1, {1}, {2}, Rat(1)));
  }

  SUBCASE("schrodinger") {
    const HatMap h = hat_rep(builtin("schrodinger"), p);
    CHECK(h.pairs == 2);
    CHECK(h.images.at("M") == WeylPoly::constant(2, p.m));
    CHECK(h.images.at("K") == WeylPoly::r(2, 1));
    CHECK(h.images.at("G") == WeylPoly::r(2, 2));
    CHECK(h.images.at("D") ==
          WeylPoly::constant(2, p.c) +
              Rat(2) * WeylPoly::monomial(2, {1, 0}, {1, 0}, Rat(1)) +
              WeylPoly::monomial(2, {0, 1}, {0, 1}, Rat(1)));
    CHECK(h.images.at("P_x") ==
          p.m * WeylPoly::v(2, 2) +
              WeylPoly::monomial(2, {0, 1}, {1, 0}, Rat(1)));
    CHECK(h.images.at("P_t") ==
          p.c * WeylPoly::v(2, 1) +
              (p.m / 2) * WeylPoly::monomial(2, {0, 0}, {0, 2}, Rat(1)) +
              WeylPoly::monomial(2, {1, 0}, {2, 0}, Rat(1)) +
              WeylPoly::monomial(2, {0, 1}, {1, 1}, Rat(1)));
  }
}

TEST_CASE("hat maps are Lie homomorphisms at several parameter points") {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid()) {
      const Report rep = check_homomorphism(hat_rep(builtin(name), p));
      INFO("algebra " << name << " at m = " << rat_str(p.m)
                      << ", c = " << rat_str(p.c));
      CHECK(rep.pass());
      const size_t n = builtin(name).basis.size();
      CHECK(rep.checks.size() == n * (n - 1) / 2);
    }
}

TEST_CASE("homomorphism check flags a corrupted image") {
  HatMap h = hat_rep(builtin("schrodinger"), Params{Rat(1), Rat(1)});
  // Drop the R2 V2 part of the dilation image.
  h.images["D"] = WeylPoly::constant(2, Rat(1)) +
                  Rat(2) * WeylPoly::monomial(2, {1, 0}, {1, 0}, Rat(1));
  const Report rep = check_homomorphism(h);
  CHECK_FALSE(rep.pass());
  bool dg_failed = false;
  for (const auto& ch : rep.checks)
    if (!ch.pass && ch.description.find("D") != std::string::npos &&
        ch.description.find("G") != std::string::npos)
      dg_failed = true;
  CHECK(dg_failed);
}

TEST_CASE("hat extension is multiplicative on envelope words") {
  const LieAlgebraSpec alg = builtin("schrodinger");
  const Params p{Rat(2), Rat(1, 2)};
  const HatMap h = hat_rep(alg, p);
  const EnvElement word = EnvElement::gen("K") * EnvElement::gen("P_x");
  CHECK(hat_of(h, word) ==
        weyl_mul(h.images.at("K"), h.images.at("P_x")));
  CHECK_THROWS_AS(hat_of(h, EnvElement::gen("Q")), Error);
}

TEST_CASE("decoupled triple has the stated closed forms") {
  const Params p{Rat(3, 2), Rat(5, 7)};
  const HatMap h = hat_rep(builtin("schrodinger"), p);
  const auto [triple, rep] = decoupled_generators(h);
  CHECK(rep.pass());

  const Rat inv2m = Rat(1) / (2 * p.m);
  const WeylPoly r0prime =
      WeylPoly::r(2, 1) - inv2m * WeylPoly::monomial(2, {0, 2}, {0, 0}, Rat(1));
  CHECK(triple.r0 == r0prime);
  CHECK(triple.l0 ==
        (p.c - Rat(1, 2)) * WeylPoly::v(2, 1) +
            weyl_mul(r0prime, WeylPoly::monomial(2, {0, 0}, {2, 0}, Rat(1))));
  CHECK(triple.rho0 ==
        WeylPoly::constant(2, p.c - Rat(1, 2)) +
            Rat(2) * weyl_mul(r0prime, WeylPoly::v(2, 1)));

  SUBCASE("the triple closes as sl2 and commutes with the radical part") {
    CHECK(weyl_commutator(triple.l0, triple.r0) == triple.rho0);
    CHECK(weyl_commutator(triple.rho0, triple.r0) == Rat(2) * triple.r0);
    CHECK(weyl_commutator(triple.l0, triple.rho0) == Rat(2) * triple.l0);
    for (const char* g : {"G", "P_x", "M"}) {
      CHECK(weyl_commutator(triple.l0, h.images.at(g)).is_zero());
      CHECK(weyl_commutator(triple.r0, h.images.at(g)).is_zero());
      CHECK(weyl_commutator(triple.rho0, h.images.at(g)).is_zero());
    }
  }
}

TEST_CASE("decoupling requires nonzero m") {
  const HatMap h = hat_rep(builtin("schrodinger"), Params{Rat(0), Rat(1)});
  CHECK_THROWS_AS(decoupled_generators(h), Error);
  try {
    decoupled_generators(h);
  } catch (const Error& err) {
    CHECK(err.code == "m-zero");
  }
}

TEST_CASE("hat representation exists only for the builtin algebras") {
  LieAlgebraSpec alg = builtin("hw");
  alg.name = "custom";
  CHECK_THROWS_AS(hat_rep(alg, Params{}), Error);
}
