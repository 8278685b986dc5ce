#include "doctest.h"

#include <random>

#include "bkit/theorems.hpp"

using namespace bkit;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Rat det_laplace(const std::vector<std::vector<Rat>>& a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rat out = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Rat>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const Rat term = a[0][j] * det_laplace(minor);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

}  // namespace

TEST_CASE("leading minors match the cofactor-expansion oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Rat>> a(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        Rat value(entry(rng), 1 + (trial % 3));
        value.canonicalize();
        a[i][j] = value;
        a[j][i] = value;
      }
    const auto minors = leading_minors(a);
    REQUIRE(minors.size() == 4);
    for (int k = 1; k <= 4; ++k) {
      std::vector<std::vector<Rat>> block(k, std::vector<Rat>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) block[i][j] = a[i][j];
      CHECK(minors[k - 1] == det_laplace(block));
    }
  }
}

TEST_CASE("leading minors survive zero pivots") {
  const std::vector<std::vector<Rat>> a{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(leading_minors(a) == std::vector<Rat>{Rat(0), Rat(-1)});
}

TEST_CASE("hw field-operator Hankel minors at m = 1, frozen") {
  const HatMap h = hat_rep(builtin("hw"), Params{Rat(1), Rat(1)});
  const EnvElement x = catalog_observable(builtin("hw"), "X1", h.params);
  std::vector<std::vector<Rat>> hankel(4, std::vector<Rat>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) hankel[i][j] = moment(h, x, i + j);
  CHECK(leading_minors(hankel) ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(2), Rat(12)});
}

TEST_CASE("frozen low moments") {
  const Params p{Rat(3, 2), Rat(5, 7)};
  SUBCASE("sl2 full generator sum: second moment c^2 + c") {
    const HatMap h = hat_rep(builtin("sl2"), p);
    const EnvElement x = catalog_observable(builtin("sl2"), "X2", p);
    CHECK(moment(h, x, 0) == 1);
    CHECK(moment(h, x, 1) == p.c);
    CHECK(moment(h, x, 2) == p.c * p.c + p.c);
  }
  SUBCASE("schrodinger field pair: gaussian moments with variance m") {
    const HatMap h = hat_rep(builtin("schrodinger"), p);
    const EnvElement x = catalog_observable(builtin("schrodinger"), "X2", p);
    CHECK(moment(h, x, 1) == 0);
    CHECK(moment(h, x, 2) == p.m);
    CHECK(moment(h, x, 3) == 0);
    CHECK(moment(h, x, 4) == 3 * p.m * p.m);
  }
}

TEST_CASE("gaussian moment theorem for the hw field operator") {
  for (const Rat& m : {Rat(1), Rat(2), Rat(3, 2)}) {
    const TheoremReport rep = gaussian_check(10, m);
    INFO("m = " << rat_str(m));
    CHECK(rep.pass());
    CHECK(rep.checks.size() >= 11);
  }
}

TEST_CASE("hankel positivity holds for every algebra on the grid") {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid()) {
      const LieAlgebraSpec alg = builtin(name);
      const TheoremReport rep =
          hankel_positivity(alg, hankel_observable(alg), p, 3);
      INFO(rep.theorem << " at m = " << rat_str(p.m)
                       << ", c = " << rat_str(p.c));
      CHECK(rep.pass());
      CHECK(rep.checks.size() == 4);
    }
}

TEST_CASE("gram positivity on the weighted-degree-4 block") {
  for (const auto& p : {Params{Rat(1), Rat(1)}, Params{Rat(3, 2), Rat(5, 7)}}) {
    const TheoremReport rep = gram_psd(builtin("schrodinger"), p, 4);
    INFO("m = " << rat_str(p.m) << ", c = " << rat_str(p.c));
    CHECK(rep.pass());
    // Grading sparsity plus one minor per state of weighted degree <= 4;
    // the 9 states are (a, b) with 2a + b <= 4.
    CHECK(rep.checks.size() == 10);
  }
}

TEST_CASE("self-adjointness evidence for every algebra") {
  for (const auto& name : builtin_names()) {
    const TheoremReport rep =
        check_self_adjointness(builtin(name), Params{Rat(3, 2), Rat(5, 7)}, 6);
    INFO(rep.theorem);
    CHECK(rep.pass());
  }
}

TEST_CASE("a crossed adjoint assignment breaks Gram symmetry") {
  AdjointMap crossed;
  crossed.lowering_of = {{"K", "P_x"}, {"G", "P_t"}};
  const TheoremReport rep = check_self_adjointness(
      builtin("schrodinger"), crossed, Params{Rat(3, 2), Rat(5, 7)}, 6);
  REQUIRE_FALSE(rep.pass());
  bool symmetry_failed = false;
  for (const auto& ch : rep.checks)
    if (!ch.pass &&
        ch.description.find("gram(alpha, beta) = gram(beta, alpha)") !=
            std::string::npos)
      symmetry_failed = true;
  CHECK(symmetry_failed);
}

TEST_CASE("decoupling theorem verifies at every grid point") {
  for (const auto& p : params_grid()) {
    const TheoremReport rep = check_decoupling(p, 6);
    INFO("m = " << rat_str(p.m) << ", c = " << rat_str(p.c));
    CHECK(rep.pass());
  }
}

TEST_CASE("the constant shift in rho0 is essential") {
  const Params p{Rat(3, 2), Rat(5, 7)};
  const HatMap h = hat_rep(builtin("schrodinger"), p);
  const auto [triple, rep] = decoupled_generators(h);
  REQUIRE(rep.pass());
  const WeylPoly unshifted = triple.rho0 + WeylPoly::constant(2, Rat(1, 2));
  const Report bad =
      sl2_relations_report(triple.l0, triple.r0, unshifted, "unshifted rho0");
  REQUIRE_FALSE(bad.pass());
  REQUIRE(bad.checks.size() == 3);
  CHECK_FALSE(bad.checks[0].pass);  // [L0, R0] = rho0 picks up -1/2
  CHECK(bad.checks[0].detail.find("-1/2") != std::string::npos);
  CHECK(bad.checks[1].pass);  // [rho0, R0] = 2 R0 is shift-invariant
  CHECK(bad.checks[2].pass);  // [L0, rho0] = 2 L0 is shift-invariant
}

TEST_CASE("decoupled transforms vanish at c = 1/2") {
  const Params p{Rat(3), Rat(1, 2)};
  for (const char* op : {"L0", "R0", "rho0"}) {
    const MultiSeries closed =
        closed_form_berezin(builtin("schrodinger"), op, p, 5);
    INFO(op);
    CHECK(closed.is_zero());
    const MultiSeries fock = berezin_from_fock(
        builtin("schrodinger"),
        catalog_observable(builtin("schrodinger"), op, p), p, 5);
    CHECK(fock.is_zero());
  }
}
