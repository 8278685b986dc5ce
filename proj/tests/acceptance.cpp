// Acceptance gate: every release-blocking property of the library, one
// criterion per line. Exit code is the number of failed criteria.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bkit/runner.hpp"
#include "bkit/theorems.hpp"

using namespace bkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << title;
  if (!ok && !detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

// Frozen structure-constant table, basis order M, K, G, D, P_x, P_t.
struct TableEntry {
  const char* left;
  const char* right;
  int coeff;
  const char* result;
};

constexpr TableEntry kSchrodingerTable[] = {
    {"K", "D", -2, "K"},    {"K", "P_x", -1, "G"},  {"K", "P_t", -1, "D"},
    {"G", "D", -1, "G"},    {"G", "P_x", -1, "M"},  {"G", "P_t", -1, "P_x"},
    {"D", "K", 2, "K"},     {"D", "G", 1, "G"},     {"D", "P_x", -1, "P_x"},
    {"D", "P_t", -2, "P_t"}, {"P_x", "K", 1, "G"},  {"P_x", "G", 1, "M"},
    {"P_x", "D", 1, "P_x"}, {"P_t", "K", 1, "D"},   {"P_t", "G", 1, "P_x"},
    {"P_t", "D", 2, "P_t"},
};

EnvElement expected_bracket(const std::string& a, const std::string& b) {
  for (const auto& e : kSchrodingerTable)
    if (a == e.left && b == e.right)
      return Rat(e.coeff) * EnvElement::gen(e.result);
  return EnvElement::zero();
}

bool criterion_structure(std::string& detail) {
  for (const auto& name : builtin_names()) {
    const Report rep = verify_jacobi(builtin(name));
    if (!rep.pass()) {
      detail = "jacobi fails for " + name;
      return false;
    }
  }
  const LieAlgebraSpec alg = builtin("schrodinger");
  if (verify_jacobi(alg).checks.size() != 20) {
    detail = "expected 20 jacobi triples";
    return false;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!(alg.basis_bracket(i, j) ==
            expected_bracket(alg.basis[i], alg.basis[j]))) {
        detail = "[" + alg.basis[i] + ", " + alg.basis[j] +
                 "] deviates from the frozen table";
        return false;
      }
  return true;
}

bool criterion_homomorphism(std::string& detail) {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid()) {
      const Report rep = check_homomorphism(hat_rep(builtin(name), p));
      const size_t n = builtin(name).basis.size();
      if (rep.checks.size() != n * (n - 1) / 2) {
        detail = name + ": wrong pair count";
        return false;
      }
      if (!rep.pass()) {
        detail = name + " at m=" + rat_str(p.m) + " c=" + rat_str(p.c);
        return false;
      }
    }
  return true;
}

bool criterion_leibniz_routes(std::string& detail) {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid()) {
      const ComparisonReport rep = check_leibniz_routes(builtin(name), p, 8);
      if (!rep.pass()) {
        detail = rep.subject + ": " + std::to_string(rep.mismatches.size()) +
                 " mismatches";
        return false;
      }
    }
  return true;
}

bool criterion_pdes(std::string& detail) {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid())
      for (const auto& rep : check_defining_pdes(builtin(name), p, 8)) {
        if (rep.cap < 7) {
          detail = rep.subject + ": compared only to degree " +
                   std::to_string(rep.cap);
          return false;
        }
        if (!rep.pass()) {
          detail = rep.subject;
          return false;
        }
      }
  return true;
}

bool criterion_berezin_table(std::string& detail) {
  for (const auto& name : builtin_names()) {
    const LieAlgebraSpec alg = builtin(name);
    std::vector<std::string> ops;
    if (name == "hw") ops = {"H", "X", "P", "X1"};
    if (name == "sl2") ops = {"rho", "R", "L", "X2"};
    if (name == "schrodinger")
      ops = {"M", "K", "G", "D", "P_x", "P_t", "X1", "X2"};
    for (const auto& p : params_grid())
      for (const auto& op : ops) {
        const ComparisonReport rep = check_berezin_routes(alg, op, p, 6);
        if (!rep.pass()) {
          detail = rep.subject + " at m=" + rat_str(p.m);
          return false;
        }
      }
  }
  return true;
}

bool criterion_decoupling(std::string& detail) {
  for (const auto& p : params_grid()) {
    const TheoremReport rep = check_decoupling(p, 6);
    if (!rep.pass()) {
      for (const auto& ch : rep.checks)
        if (!ch.pass) {
          detail = ch.description;
          return false;
        }
      return false;
    }
  }
  return true;
}

bool criterion_gaussian(std::string& detail) {
  for (const Rat& m : {Rat(1), Rat(2), Rat(3, 2)}) {
    const TheoremReport rep = gaussian_check(10, m);
    if (!rep.pass()) {
      detail = "m = " + rat_str(m);
      return false;
    }
  }
  return true;
}

bool criterion_hankel(std::string& detail) {
  for (const auto& name : builtin_names())
    for (const auto& p : params_grid()) {
      const LieAlgebraSpec alg = builtin(name);
      const TheoremReport rep =
          hankel_positivity(alg, hankel_observable(alg), p, 3);
      if (!rep.pass()) {
        detail = rep.theorem;
        return false;
      }
    }
  const TheoremReport psd = gram_psd(builtin("schrodinger"),
                                     Params{Rat(1), Rat(1)}, 4);
  if (!psd.pass()) {
    detail = "gram block not PSD at m=1 c=1";
    return false;
  }
  return true;
}

bool criterion_lemma(std::string& detail) {
  for (const auto& p : params_grid())
    if (!check_lemma(p, 6, false).pass()) {
      detail = "consistent reading fails at m=" + rat_str(p.m);
      return false;
    }
  const ComparisonReport raw = check_lemma(Params{Rat(1), Rat(1)}, 6, true);
  if (raw.pass()) {
    detail = "raw reading unexpectedly agreed at m=1";
    return false;
  }
  if (raw.mismatches.front().key != "w2 v2") {
    detail = "first raw mismatch at '" + raw.mismatches.front().key +
             "', expected 'w2 v2'";
    return false;
  }
  if (!check_lemma(Params{Rat(2), Rat(5, 7)}, 6, true).pass()) {
    detail = "readings should coincide at m=2";
    return false;
  }
  return true;
}

struct MutationOutcome {
  std::string name;
  bool detected = false;
  bool localized = false;
  std::string note;
};

std::vector<MutationOutcome> run_mutations() {
  std::vector<MutationOutcome> out;
  const Params p{Rat(3, 2), Rat(5, 7)};

  {
    MutationOutcome mo;
    mo.name = "structure table: [D, K] -> 3 K";
    LieAlgebraSpec alg = builtin("schrodinger");
    alg.set_bracket("D", "K", Rat(3) * EnvElement::gen("K"));
    const Report rep = verify_jacobi(alg);
    int failing = 0;
    for (const auto& ch : rep.checks)
      if (!ch.pass) ++failing;
    mo.detected = !rep.pass() && failing > 0;
    // The overlap machinery never consults the bracket table, so the
    // corruption stays invisible to it: the failure is jacobi's alone.
    mo.localized = check_leibniz_routes(alg, p, 4).pass();
    mo.note = std::to_string(failing) + " failing jacobi triples";
    out.push_back(mo);
  }

  {
    MutationOutcome mo;
    mo.name = "realization: dilation image drops R2 V2";
    HatMap h = hat_rep(builtin("schrodinger"), p);
    h.images["D"] = WeylPoly::constant(2, p.c) +
                    Rat(2) * WeylPoly::monomial(2, {1, 0}, {1, 0}, Rat(1));
    const Report rep = check_homomorphism(h);
    int failing = 0;
    bool dg = false;
    for (const auto& ch : rep.checks)
      if (!ch.pass) {
        ++failing;
        if (ch.description == "[G, D]") dg = true;
      }
    mo.detected = !rep.pass();
    mo.localized = dg && verify_jacobi(h.algebra).pass();
    mo.note = "[G, D] among " + std::to_string(failing) + " failing pairs";
    out.push_back(mo);
  }

  {
    MutationOutcome mo;
    mo.name = "adjoint: K* and G* crossed";
    AdjointMap crossed;
    crossed.lowering_of = {{"K", "P_x"}, {"G", "P_t"}};
    const TheoremReport rep =
        check_self_adjointness(builtin("schrodinger"), crossed, p, 6);
    int failing = 0;
    bool symmetry = false;
    for (const auto& ch : rep.checks)
      if (!ch.pass) {
        ++failing;
        if (ch.description.find("gram(alpha, beta) = gram(beta, alpha)") !=
            std::string::npos)
          symmetry = true;
      }
    mo.detected = !rep.pass();
    mo.localized =
        symmetry &&
        check_homomorphism(hat_rep(builtin("schrodinger"), p)).pass();
    mo.note = std::to_string(failing) + " failing adjoint checks";
    out.push_back(mo);
  }

  {
    MutationOutcome mo;
    mo.name = "decoupling: constant shift removed from rho0";
    const HatMap h = hat_rep(builtin("schrodinger"), p);
    const auto [triple, rep] = decoupled_generators(h);
    const WeylPoly unshifted = triple.rho0 + WeylPoly::constant(2, Rat(1, 2));
    const Report bad = sl2_relations_report(triple.l0, triple.r0, unshifted,
                                            "unshifted rho0");
    mo.detected = !bad.pass();
    mo.localized = rep.pass() && bad.checks.size() == 3 &&
                   !bad.checks[0].pass && bad.checks[1].pass &&
                   bad.checks[2].pass &&
                   bad.checks[0].detail.find("-1/2") != std::string::npos;
    mo.note = "bracket relation picks up the constant residual -1/2";
    out.push_back(mo);
  }

  {
    MutationOutcome mo;
    mo.name = "differential equation: c v1 coefficient raised to (c+1) v1";
    const MultiSeries ups = leibniz_from_fock(builtin("sl2"), p, 6);
    PdeSpec spec;
    spec.w_var = "w1";
    spec.description = "d/dw1 Y = (c+1) v1 Y + v1^2 d/dv1 Y";
    spec.rhs.push_back(PdeTerm{p.c + 1, {1}, {0}});
    spec.rhs.push_back(PdeTerm{Rat(1), {2}, {1}});
    const ComparisonReport rep = check_pde(ups, spec, p);
    mo.detected = !rep.pass();
    mo.localized = !rep.mismatches.empty() &&
                   rep.mismatches.front().key == "v1" &&
                   check_defining_pdes(builtin("sl2"), p, 6)[0].pass();
    mo.note = std::to_string(rep.mismatches.size()) +
              " mismatching coefficients, first at v1";
    out.push_back(mo);
  }

  {
    MutationOutcome mo;
    mo.name = "transform table: boost entry loses its w1 v2 part";
    const LieAlgebraSpec alg = builtin("schrodinger");
    const std::vector<std::string> vars = series_vars(alg);
    MultiSeries u = MultiSeries::constant(vars, 5, Rat(1));
    u.add_term({1, 0, 1, 0}, Rat(-1));
    MultiSeries numerator = MultiSeries::zero(vars, 5);
    numerator.add_term({0, 1, 0, 0}, p.m);
    const MultiSeries corrupted = series_div(numerator, u);
    const MultiSeries fock = berezin_from_fock(alg, EnvElement::gen("G"), p, 5);
    const ComparisonReport rep =
        compare_series("berezin(schrodinger, G)", fock, "fock contraction",
                       corrupted, "corrupted closed form", p, 5);
    mo.detected = !rep.pass();
    mo.localized = !rep.mismatches.empty() &&
                   rep.mismatches.front().key == "w1 v2" &&
                   check_berezin_routes(alg, "G", p, 5).pass();
    mo.note = std::to_string(rep.mismatches.size()) +
              " mismatching coefficients, first at w1 v2";
    out.push_back(mo);
  }

  return out;
}

bool criterion_mutations(std::string& detail) {
  const auto outcomes = run_mutations();
  bool ok = outcomes.size() >= 5;
  for (const auto& mo : outcomes) {
    std::cout << "  - " << mo.name << ": "
              << (mo.detected && mo.localized ? "detected" : "MISSED") << " ("
              << mo.note << ")\n";
    if (!mo.detected || !mo.localized) {
      ok = false;
      detail = "mutation not caught as predicted: " + mo.name;
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::cout << "acceptance gate\n";

  criterion(1, "structure constants and jacobi identities", criterion_structure);
  criterion(2, "hat realizations are homomorphisms on every generator pair",
            criterion_homomorphism);
  criterion(3, "overlap routes agree to degree 8 at all grid points",
            criterion_leibniz_routes);
  criterion(4, "defining differential equations hold to degree 7",
            criterion_pdes);
  criterion(5, "transform table agrees with the contraction route to degree 6",
            criterion_berezin_table);
  criterion(6, "decoupled sl2 triple: closed forms, relations, transforms",
            criterion_decoupling);
  criterion(7, "gaussian moment law to order 10 at m = 1, 2, 3/2",
            criterion_gaussian);
  criterion(8, "hankel matrices and the graded Gram block are PSD",
            criterion_hankel);
  criterion(9, "coherent-state factorization incl. the documented raw-reading "
               "discrepancy", criterion_lemma);
  std::cout << "mutation battery:\n";
  criterion(10, "every seeded defect is caught by its own check and only there",
            criterion_mutations);

  std::cout << (failures == 0 ? "acceptance: all criteria hold\n"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed\n");
  return failures;
}
