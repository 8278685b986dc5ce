#include "bkit/runner.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace bkit {

const std::vector<std::string>& suite_order() {
  static const std::vector<std::string> order{
      "jacobi",  "homomorphism", "leibniz",    "pdes",    "berezin",
      "selfadjoint", "decoupling",   "gaussian", "hankel"};
  return order;
}

namespace {

std::string params_label(const Params& p) {
  return "m=" + rat_str(p.m) + " c=" + rat_str(p.c);
}

struct Emitted {
  std::string suite;
  std::string subject;
  bool pass = false;
  Json body;
  std::vector<std::string> failure_lines;
};

constexpr size_t kMaxFailureLines = 5;

Emitted emit_report(const std::string& suite, const Report& r,
                    const Params* p = nullptr) {
  Emitted e;
  e.suite = suite;
  e.subject = r.subject + (p ? " @ " + params_label(*p) : "");
  e.pass = r.pass();
  e.body = r.to_json();
  if (p) e.body["params"] = params_json(*p);
  for (const auto& ch : r.checks) {
    if (ch.pass || e.failure_lines.size() >= kMaxFailureLines) continue;
    e.failure_lines.push_back(ch.description +
                              (ch.detail.empty() ? "" : ": " + ch.detail));
  }
  return e;
}

Emitted emit_comparison(const std::string& suite, const ComparisonReport& r) {
  Emitted e;
  e.suite = suite;
  e.subject = r.subject + " @ " + params_label(r.params);
  e.pass = r.pass();
  e.body = r.to_json();
  for (const auto& mm : r.mismatches) {
    if (e.failure_lines.size() >= kMaxFailureLines) break;
    e.failure_lines.push_back(mm.key + ": " + mm.lhs + " vs " + mm.rhs);
  }
  return e;
}

Emitted emit_theorem(const std::string& suite, const TheoremReport& r) {
  Emitted e;
  e.suite = suite;
  e.subject = r.theorem;
  if (!r.params.empty()) e.subject += " @ " + params_label(r.params.front());
  e.pass = r.pass();
  e.body = r.to_json();
  for (const auto& ch : r.checks) {
    if (ch.pass || e.failure_lines.size() >= kMaxFailureLines) continue;
    e.failure_lines.push_back(ch.description +
                              (ch.detail.empty() ? "" : ": " + ch.detail));
  }
  return e;
}

// Seeded randomized spot checks of the Weyl-algebra arithmetic; the one
// place --seed matters. Bounded degrees keep each trial instant.
Report weyl_property_probe(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 3), expd(0, 2), coeffd(-3, 3);
  auto random_poly = [&]() {
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
  };
  Report report;
  report.subject = "weyl-properties(seed=" + std::to_string(seed) + ")";
  for (int trial = 0; trial < 20; ++trial) {
    const WeylPoly a = random_poly(), b = random_poly(), c = random_poly();
    const bool assoc =
        weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c));
    const bool dist =
        weyl_mul(a, b + c) == weyl_mul(a, b) + weyl_mul(a, c);
    CheckItem item;
    item.description =
        "trial " + std::to_string(trial) + ": (ab)c = a(bc), a(b+c) = ab + ac";
    item.pass = assoc && dist;
    if (!item.pass)
      item.detail = "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
    report.checks.push_back(item);
  }
  return report;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& req) {
  std::set<std::string> want;
  for (const auto& s : req) {
    if (s == "all") {
      for (const auto& t : suite_order()) want.insert(t);
      continue;
    }
    if (std::find(suite_order().begin(), suite_order().end(), s) ==
        suite_order().end()) {
      std::string known = "all";
      for (const auto& t : suite_order()) known += ", " + t;
      throw Error("unknown-suite",
                  "unknown suite '" + s + "' (known: " + known + ")");
    }
    want.insert(s);
  }
  std::vector<std::string> out;
  for (const auto& s : suite_order())
    if (want.count(s)) out.push_back(s);
  return out;
}

std::vector<std::string> berezin_suite_ops(const LieAlgebraSpec& alg) {
  if (alg.name == "hw") return {"H", "X", "P", "X1"};
  if (alg.name == "sl2") return {"rho", "R", "L", "X2"};
  return {"M", "K", "G", "D", "P_x", "P_t", "X1", "X2"};
}

// <R_j> = d log Y / d v_j and <L_j> = d log Y / d w_j, fock route only.
std::vector<ComparisonReport> log_derivative_checks(const LieAlgebraSpec& alg,
                                                    const Params& p, int cap) {
  const MultiSeries ups = leibniz_from_fock(alg, p, cap);
  const MultiSeries logu = series_log(ups);
  const AdjointMap adj = default_adjoint(alg);
  const auto raising = raising_generators(alg);
  std::vector<ComparisonReport> out;
  for (size_t j = 0; j < raising.size(); ++j) {
    const std::string vvar = "v" + std::to_string(j + 1);
    const std::string wvar = "w" + std::to_string(j + 1);
    const std::string lower = adj.lowering_of.at(raising[j]);
    out.push_back(compare_series(
        "logderiv(" + alg.name + ", " + raising[j] + ")",
        truncate(berezin_from_fock(alg, EnvElement::gen(raising[j]), p, cap),
                 cap - 1),
        "fock-route transform", series_deriv(logu, vvar),
        "d log Y / d" + vvar, p, cap - 1));
    out.push_back(compare_series(
        "logderiv(" + alg.name + ", " + lower + ")",
        truncate(berezin_from_fock(alg, EnvElement::gen(lower), p, cap),
                 cap - 1),
        "fock-route transform", series_deriv(logu, wvar),
        "d log Y / d" + wvar, p, cap - 1));
  }
  return out;
}

Emitted raw_lemma_wrapper(const Params& p, int cap) {
  Report rep;
  rep.subject = "lemma-raw-known-discrepancy(schrodinger)";
  CheckItem item;
  item.description =
      "raw double-(m/2) reading disagrees with the vacuum expansion";
  Json inner_mm = Json::array();
  if (p.m == 2) {
    item.pass = true;
    item.detail = "raw and consistent readings coincide at m = 2 (m^2/4 = m/2)";
  } else {
    const ComparisonReport inner = check_lemma(p, cap, true);
    item.pass = !inner.mismatches.empty();
    if (item.pass) {
      const auto& mm = inner.mismatches.front();
      item.detail = "first mismatch at " + mm.key + ": vacuum expansion " +
                    mm.lhs + " vs raw reading " + mm.rhs;
    } else {
      item.detail = "raw reading unexpectedly agreed with the expansion";
    }
    for (size_t i = 0; i < inner.mismatches.size() && i < 3; ++i)
      inner_mm.push_back(Json{{"key", inner.mismatches[i].key},
                              {"lhs", inner.mismatches[i].lhs},
                              {"rhs", inner.mismatches[i].rhs}});
  }
  rep.checks = {item};
  Emitted e = emit_report("leibniz", rep, &p);
  e.body["known_discrepancy"] = true;
  e.body["mismatches"] = inner_mm;
  return e;
}

Json config_json(const RunConfig& cfg) {
  Json c{{"command", cfg.command},
         {"algebra", cfg.algebra},
         {"m", rat_str(cfg.params.m)},
         {"c", rat_str(cfg.params.c)},
         {"cap", cfg.cap},
         {"order", cfg.order},
         {"suites", cfg.suites},
         {"format", cfg.format},
         {"seed", cfg.seed},
         {"params_grid", cfg.params_grid}};
  if (cfg.algebra_file) c["algebra_file"] = *cfg.algebra_file;
  if (!cfg.op.empty()) c["op"] = cfg.op;
  return c;
}

// "X+P" style sums of generator/catalog names.
EnvElement parse_observable(const LieAlgebraSpec& alg, const std::string& op,
                            const Params& p) {
  EnvElement out = EnvElement::zero();
  std::string token;
  std::stringstream ss(op);
  bool any = false;
  while (std::getline(ss, token, '+')) {
    if (token.empty())
      throw Error("unknown-operator", "empty operator name in '" + op + "'");
    out = out + catalog_observable(alg, token, p);
    any = true;
  }
  if (!any) throw Error("unknown-operator", "empty operator name");
  return out;
}

struct VerifyPlan {
  std::vector<std::string> suites;
  std::vector<LieAlgebraSpec> algebras;
  std::optional<LieAlgebraSpec> custom;
  std::vector<Params> points;
};

VerifyPlan make_plan(const RunConfig& cfg) {
  VerifyPlan plan;
  plan.suites = expand_suites(cfg.suites);

  if (cfg.algebra_file) {
    std::ifstream in(*cfg.algebra_file);
    if (!in)
      throw Error("bad-algebra-file",
                  "cannot read algebra file '" + *cfg.algebra_file + "'");
    Json doc;
    try {
      in >> doc;
    } catch (const Json::exception& ex) {
      throw Error("bad-algebra-file",
                  std::string("algebra file is not valid JSON: ") + ex.what());
    }
    plan.custom = algebra_from_json(doc);
    // "all" (the default) silently narrows to what a bare structure-constant
    // table can support; naming any other suite outright is an error.
    for (const auto& s : cfg.suites)
      if (s != "jacobi" && s != "all")
        throw Error("no-hat-representation",
                    "custom algebras support the jacobi suite only "
                    "(requested '" + s + "'); pass --suite jacobi");
    plan.suites = {"jacobi"};
    return plan;
  }

  if (cfg.algebra == "all") {
    for (const auto& name : builtin_names())
      plan.algebras.push_back(builtin(name));
  } else {
    plan.algebras.push_back(builtin(cfg.algebra));
  }

  plan.points = cfg.params_grid ? params_grid()
                                : std::vector<Params>{cfg.params};

  // Suites tied to one algebra: an explicit request that cannot run is an
  // error, while "all" simply skips them for the other algebras.
  const bool explicit_decoupling =
      std::find(cfg.suites.begin(), cfg.suites.end(), "decoupling") !=
      cfg.suites.end();
  const bool explicit_gaussian =
      std::find(cfg.suites.begin(), cfg.suites.end(), "gaussian") !=
      cfg.suites.end();
  const auto selected = [&](const std::string& name) {
    return std::any_of(plan.algebras.begin(), plan.algebras.end(),
                       [&](const LieAlgebraSpec& a) { return a.name == name; });
  };
  if (explicit_decoupling && !selected("schrodinger"))
    throw Error("no-decoupling",
                "the decoupling suite requires the schrodinger algebra");
  if (explicit_gaussian && !selected("hw"))
    throw Error("bad-argument", "the gaussian suite requires the hw algebra");
  const bool decoupling_runs =
      std::find(plan.suites.begin(), plan.suites.end(), "decoupling") !=
          plan.suites.end() &&
      selected("schrodinger");
  if (decoupling_runs) {
    for (const auto& pt : plan.points)
      if (pt.m == 0)
        throw Error("m-zero",
                    "m must be nonzero: the decoupled generators involve 1/(2m)");
  }

  const bool series_suites =
      std::any_of(plan.suites.begin(), plan.suites.end(), [](const std::string& s) {
        return s == "leibniz" || s == "pdes" || s == "berezin" ||
               s == "selfadjoint" || s == "decoupling";
      });
  if (series_suites && cfg.cap < 2)
    throw Error("cap-too-small",
                "--cap must be at least 2 for series-based suites");
  if (cfg.cap < 0) throw Error("cap-too-small", "--cap must be nonnegative");
  return plan;
}

std::vector<Emitted> run_verify(const RunConfig& cfg, const VerifyPlan& plan) {
  std::vector<Emitted> out;
  for (const auto& suite : plan.suites) {
    if (suite == "jacobi") {
      if (plan.custom) {
        out.push_back(emit_report(suite, verify_jacobi(*plan.custom)));
        continue;
      }
      for (const auto& alg : plan.algebras)
        out.push_back(emit_report(suite, verify_jacobi(alg)));
    } else if (suite == "homomorphism") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points)
          out.push_back(
              emit_report(suite, check_homomorphism(hat_rep(alg, pt)), &pt));
      out.push_back(emit_report(suite, weyl_property_probe(cfg.seed)));
    } else if (suite == "leibniz") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points) {
          out.push_back(
              emit_comparison(suite, check_leibniz_routes(alg, pt, cfg.cap)));
          for (const auto& rep : check_leibniz_formula(alg, pt, cfg.cap))
            out.push_back(emit_comparison(suite, rep));
          if (alg.name == "schrodinger")
            out.push_back(raw_lemma_wrapper(pt, std::min(cfg.cap, 6)));
        }
    } else if (suite == "pdes") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points)
          for (const auto& rep : check_defining_pdes(alg, pt, cfg.cap))
            out.push_back(emit_comparison(suite, rep));
    } else if (suite == "berezin") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points) {
          for (const auto& op : berezin_suite_ops(alg))
            out.push_back(emit_comparison(
                suite, check_berezin_routes(alg, op, pt, cfg.cap)));
          for (const auto& rep : log_derivative_checks(alg, pt, cfg.cap))
            out.push_back(emit_comparison(suite, rep));
        }
    } else if (suite == "selfadjoint") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points)
          out.push_back(
              emit_theorem(suite, check_self_adjointness(alg, pt, cfg.cap)));
    } else if (suite == "decoupling") {
      for (const auto& alg : plan.algebras) {
        if (alg.name != "schrodinger") continue;
        for (const auto& pt : plan.points)
          out.push_back(emit_theorem(suite, check_decoupling(pt, cfg.cap)));
      }
    } else if (suite == "gaussian") {
      for (const auto& alg : plan.algebras) {
        if (alg.name != "hw") continue;
        if (cfg.params_grid) {
          for (const Rat& m : {Rat(1), Rat(3, 2), Rat(2)})
            out.push_back(emit_theorem(suite, gaussian_check(cfg.order, m)));
        } else {
          out.push_back(
              emit_theorem(suite, gaussian_check(cfg.order, cfg.params.m)));
        }
      }
    } else if (suite == "hankel") {
      for (const auto& alg : plan.algebras)
        for (const auto& pt : plan.points) {
          out.push_back(emit_theorem(
              suite, hankel_positivity(alg, hankel_observable(alg), pt, 3)));
          if (alg.name == "schrodinger")
            out.push_back(emit_theorem(suite, gram_psd(alg, pt, 4)));
        }
    }
  }
  return out;
}

std::string render(const RunConfig& cfg, const std::vector<Emitted>& emitted,
                   int* exit_code) {
  int failures = 0;
  for (const auto& e : emitted)
    if (!e.pass) ++failures;
  *exit_code = failures ? 1 : 0;
  if (cfg.format == "json") {
    Json doc{{"version", "berezin-kit/1"}, {"config", config_json(cfg)}};
    Json reports = Json::array();
    for (const auto& e : emitted) {
      Json body = e.body;
      Json entry{{"suite", e.suite}};
      entry.update(body);
      reports.push_back(entry);
    }
    doc["reports"] = reports;
    return doc.dump(2) + "\n";
  }
  std::string out = "berezin-kit " + cfg.command + ": algebra=" + cfg.algebra +
                    " " + params_label(cfg.params) +
                    " cap=" + std::to_string(cfg.cap) +
                    " seed=" + std::to_string(cfg.seed) +
                    (cfg.params_grid ? " params-grid" : "") + "\n";
  for (const auto& e : emitted) {
    out += std::string(e.pass ? "[PASS]" : "[FAIL]") + " (" + e.suite + ") " +
           e.subject + "\n";
    if (!e.pass)
      for (const auto& line : e.failure_lines) out += "    " + line + "\n";
  }
  out += "summary: " + std::to_string(emitted.size()) + " reports, " +
         std::to_string(failures) + " failed\n";
  return out;
}

LieAlgebraSpec single_algebra(const RunConfig& cfg) {
  if (cfg.algebra == "all")
    throw Error("choose-algebra", "the '" + cfg.command +
                                      "' command needs --algebra "
                                      "hw|sl2|schrodinger");
  return builtin(cfg.algebra);
}

RunResult finish_single(const RunConfig& cfg, const std::string& text,
                        Json doc, int exit_code) {
  RunResult res;
  res.exit_code = exit_code;
  res.output = cfg.format == "json" ? doc.dump(2) + "\n" : text;
  return res;
}

RunResult run_leibniz(const RunConfig& cfg) {
  const LieAlgebraSpec alg = single_algebra(cfg);
  if (cfg.cap < 2)
    throw Error("cap-too-small", "--cap must be at least 2");
  const MultiSeries fock = leibniz_from_fock(alg, cfg.params, cfg.cap);
  const MultiSeries closed = closed_form_leibniz(alg, cfg.params, cfg.cap);
  const ComparisonReport rep =
      compare_series("leibniz(" + alg.name + ")", fock, "fock contraction",
                     closed, "closed form", cfg.params, cfg.cap);
  Json doc{{"version", "berezin-kit/1"},
           {"config", config_json(cfg)},
           {"series_fock", fock.to_json()},
           {"series_closed", closed.to_json()},
           {"report", rep.to_json()}};
  std::string text = "Leibniz function for " + alg.name + " at " +
                     params_label(cfg.params) + ", cap " +
                     std::to_string(cfg.cap) + "\n" +
                     "fock route:   " + fock.str() + "\n" +
                     "closed form:  " + closed.str() + "\n" +
                     (rep.pass() ? "[PASS] routes agree\n"
                                 : "[FAIL] " +
                                       std::to_string(rep.mismatches.size()) +
                                       " mismatches\n");
  return finish_single(cfg, text, doc, rep.pass() ? 0 : 1);
}

RunResult run_berezin(const RunConfig& cfg) {
  const LieAlgebraSpec alg = single_algebra(cfg);
  if (cfg.op.empty())
    throw Error("missing-operator", "the berezin command needs --op NAME");
  if (cfg.cap < 2)
    throw Error("cap-too-small", "--cap must be at least 2");
  const MultiSeries fock = berezin_from_fock(
      alg, parse_observable(alg, cfg.op, cfg.params), cfg.params, cfg.cap);
  Json doc{{"version", "berezin-kit/1"},
           {"config", config_json(cfg)},
           {"series_fock", fock.to_json()}};
  std::string text = "Berezin transform of " + cfg.op + " (" + alg.name +
                     ") at " + params_label(cfg.params) + ", cap " +
                     std::to_string(cfg.cap) + "\n" + "fock route:   " +
                     fock.str() + "\n";
  int exit_code = 0;
  // Closed form and comparison when the catalog covers the operator.
  const auto catalog = berezin_catalog(alg);
  if (std::find(catalog.begin(), catalog.end(), cfg.op) != catalog.end()) {
    const MultiSeries closed =
        closed_form_berezin(alg, cfg.op, cfg.params, cfg.cap);
    const ComparisonReport rep = compare_series(
        "berezin(" + alg.name + ", " + cfg.op + ")", fock, "fock contraction",
        closed, "closed form", cfg.params, cfg.cap);
    doc["series_closed"] = closed.to_json();
    doc["report"] = rep.to_json();
    text += "closed form:  " + closed.str() + "\n" +
            (rep.pass() ? "[PASS] routes agree\n"
                        : "[FAIL] " + std::to_string(rep.mismatches.size()) +
                              " mismatches\n");
    exit_code = rep.pass() ? 0 : 1;
  }
  return finish_single(cfg, text, doc, exit_code);
}

RunResult run_moments(const RunConfig& cfg) {
  const LieAlgebraSpec alg = single_algebra(cfg);
  if (cfg.op.empty())
    throw Error("missing-operator", "the moments command needs --op NAME");
  if (cfg.order < 0)
    throw Error("bad-argument", "--order must be nonnegative");
  const HatMap h = hat_rep(alg, cfg.params);
  const EnvElement x = parse_observable(alg, cfg.op, cfg.params);
  Json table = Json::array();
  std::string text = "vacuum moments of " + cfg.op + " (" + alg.name +
                     ") at " + params_label(cfg.params) + "\n";
  for (int n = 0; n <= cfg.order; ++n) {
    const Rat mu = moment(h, x, n);
    table.push_back(Json{{"order", n}, {"value", rat_str(mu)}});
    text += "mu_" + std::to_string(n) + " = " + rat_str(mu) + "\n";
  }
  Json doc{{"version", "berezin-kit/1"},
           {"config", config_json(cfg)},
           {"moments", table}};
  return finish_single(cfg, text, doc, 0);
}

RunResult run_decouple(const RunConfig& cfg) {
  if (cfg.algebra != "all" && cfg.algebra != "schrodinger")
    throw Error("no-decoupling",
                "decoupling is defined for the schrodinger algebra only");
  if (cfg.params.m == 0)
    throw Error("m-zero",
                "m must be nonzero: the decoupled generators involve 1/(2m)");
  if (cfg.cap < 2)
    throw Error("cap-too-small", "--cap must be at least 2");
  const HatMap h = hat_rep(builtin("schrodinger"), cfg.params);
  const auto [triple, closed_report] = decoupled_generators(h);
  (void)closed_report;
  const TheoremReport rep = check_decoupling(cfg.params, cfg.cap);
  Json doc{{"version", "berezin-kit/1"},
           {"config", config_json(cfg)},
           {"generators",
            Json{{"L0", triple.l0.to_json()},
                 {"R0", triple.r0.to_json()},
                 {"rho0", triple.rho0.to_json()}}},
           {"report", rep.to_json()}};
  std::string text = "decoupled generators at " + params_label(cfg.params) +
                     "\n" + "L0   = " + triple.l0.str() + "\n" +
                     "R0   = " + triple.r0.str() + "\n" +
                     "rho0 = " + triple.rho0.str() + "\n";
  for (const auto& ch : rep.checks)
    text += std::string(ch.pass ? "[PASS] " : "[FAIL] ") + ch.description +
            (ch.pass || ch.detail.empty() ? "" : " — " + ch.detail) + "\n";
  return finish_single(cfg, text, doc, rep.pass() ? 0 : 1);
}

}  // namespace

Json report_schema() {
  return Json{
      {"version", "berezin-kit/1"},
      {"document",
       Json{{"version", "constant 'berezin-kit/1'"},
            {"config", "echo of the invocation (rationals as 'p' or 'p/q')"},
            {"reports", "array; each entry carries 'suite' plus one report"}}},
      {"report_kinds",
       Json{{"check_bundle",
             Json{{"subject", "string"},
                  {"pass", "bool"},
                  {"checks",
                   "array of {description, pass, residual?}; residual is a "
                   "human-readable residual or counterexample"}}},
            {"comparison",
             Json{{"subject", "string"},
                  {"pass", "bool (iff mismatches is empty)"},
                  {"lhs", "source of the left series"},
                  {"rhs", "source of the right series"},
                  {"cap", "degree bound of the comparison"},
                  {"params", "{m, c}"},
                  {"mismatches", "array of {key, lhs, rhs} per monomial"}}},
            {"theorem",
             Json{{"theorem", "string"},
                  {"pass", "bool"},
                  {"params", "array of {m, c}"},
                  {"checks", "as in check_bundle"}}}}},
      {"special_fields",
       Json{{"known_discrepancy",
             "true on the report that reproduces the documented raw-reading "
             "mismatch; its single check passes when the mismatch is present"},
            {"mismatches(on known_discrepancy)",
             "first differing coefficients of the raw reading"}}},
      {"errors",
       Json{{"shape", "{version, error: {code, message}}, exit code 2"},
            {"codes",
             Json::array({"bad-rational", "unknown-algebra", "unknown-suite",
                          "unknown-operator", "unknown-generator",
                          "bad-algebra-file", "no-hat-representation",
                          "no-adjoint", "no-decoupling", "m-zero",
                          "cap-too-small", "missing-operator",
                          "truncation-insufficient", "series-mismatch",
                          "pair-mismatch", "division-by-nonunit",
                          "exp-nonzero-constant", "log-nonunit",
                          "bad-argument", "choose-algebra", "bad-bracket",
                          "internal-error"})}}}};
}

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.format != "text" && cfg.format != "json")
      throw Error("bad-argument",
                  "--format must be 'text' or 'json', got '" + cfg.format + "'");
    if (cfg.command == "report-schema") {
      RunResult res;
      res.exit_code = 0;
      res.output = report_schema().dump(2) + "\n";
      return res;
    }
    if (cfg.command == "leibniz") return run_leibniz(cfg);
    if (cfg.command == "berezin") return run_berezin(cfg);
    if (cfg.command == "moments") return run_moments(cfg);
    if (cfg.command == "decouple") return run_decouple(cfg);
    if (cfg.command != "verify")
      throw Error("bad-argument", "unknown command '" + cfg.command + "'");
    const VerifyPlan plan = make_plan(cfg);
    const std::vector<Emitted> emitted = run_verify(cfg, plan);
    RunResult res;
    res.output = render(cfg, emitted, &res.exit_code);
    return res;
  } catch (const Error& err) {
    RunResult res;
    res.exit_code = 2;
    if (cfg.format == "json") {
      Json doc{{"version", "berezin-kit/1"},
               {"error", Json{{"code", err.code}, {"message", err.what()}}}};
      res.output = doc.dump(2) + "\n";
    } else {
      res.output = "error[" + err.code + "]: " + err.what() + "\n";
    }
    return res;
  } catch (const std::exception& ex) {
    RunResult res;
    res.exit_code = 2;
    if (cfg.format == "json") {
      Json doc{{"version", "berezin-kit/1"},
               {"error",
                Json{{"code", "internal-error"}, {"message", ex.what()}}}};
      res.output = doc.dump(2) + "\n";
    } else {
      res.output = std::string("error[internal-error]: ") + ex.what() + "\n";
    }
    return res;
  }
}

}  // namespace bkit
