#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bkit/runner.hpp"

namespace {

int config_error(const std::string& code, const std::string& message,
                 const std::string& format) {
  if (format == "json") {
    bkit::Json doc{{"version", "berezin-kit/1"},
                   {"error", bkit::Json{{"code", code}, {"message", message}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "error[" << code << "]: " << message << "\n";
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  bkit::RunConfig cfg;
  std::string m_text = "1";
  std::string c_text = "1";
  std::string algebra_file;

  CLI::App app{
      "berezin-kit: exact-arithmetic verification of Berezin quantization "
      "identities for the hw, sl2 and schrodinger algebras"};
  app.require_subcommand(1);

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("-m", m_text,
                    "central parameter m, a rational like 1, -2 or 3/2")
        ->capture_default_str();
    sub->add_option("-c", c_text, "lowest-weight parameter c, a rational")
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    add_params(sub);
    sub->add_option("--algebra", cfg.algebra, "hw|sl2|schrodinger|all")
        ->capture_default_str();
    sub->add_option("--cap", cfg.cap, "series degree bound")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "text|json")
        ->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "run verification suites and report pass/fail");
  add_common(verify);
  verify->add_option("--algebra-file", algebra_file,
                     "JSON structure-constant table; restricts the run to the "
                     "jacobi suite");
  verify->add_option("--suite", cfg.suites,
                     "suite to run (repeatable): jacobi, homomorphism, "
                     "leibniz, pdes, berezin, selfadjoint, decoupling, "
                     "gaussian, hankel, all");
  verify->add_option("--seed", cfg.seed, "seed for randomized spot checks")
      ->capture_default_str();
  verify->add_option("--order", cfg.order, "highest moment order checked")
      ->capture_default_str();
  verify->add_flag("--params-grid", cfg.params_grid,
                   "run each parameter-dependent suite on the built-in "
                   "parameter grid instead of -m/-c");

  CLI::App* leibniz = app.add_subcommand(
      "leibniz", "print the Leibniz function by both routes and compare");
  add_common(leibniz);

  CLI::App* berezin = app.add_subcommand(
      "berezin", "print the Berezin transform of an operator");
  add_common(berezin);
  berezin->add_option("--op", cfg.op,
                      "operator: a generator, a catalog name like X1, or a "
                      "'+'-joined sum of generators");

  CLI::App* moments = app.add_subcommand(
      "moments", "print exact vacuum moments of an operator");
  add_params(moments);
  moments->add_option("--algebra", cfg.algebra, "hw|sl2|schrodinger")
      ->capture_default_str();
  moments->add_option("--format", cfg.format, "text|json")
      ->capture_default_str();
  moments->add_option("--op", cfg.op, "operator, as in the berezin command");
  moments->add_option("--order", cfg.order, "highest moment order")
      ->capture_default_str();

  CLI::App* decouple = app.add_subcommand(
      "decouple", "print the decoupled sl2 triple inside the schrodinger "
                  "representation and verify it");
  add_common(decouple);

  CLI::App* schema = app.add_subcommand(
      "report-schema", "print the JSON report schema");
  schema->add_option("--format", cfg.format, "text|json")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return config_error("bad-argument", e.what(), cfg.format);
  }

  if (verify->parsed()) cfg.command = "verify";
  if (leibniz->parsed()) cfg.command = "leibniz";
  if (berezin->parsed()) cfg.command = "berezin";
  if (moments->parsed()) cfg.command = "moments";
  if (decouple->parsed()) cfg.command = "decouple";
  if (schema->parsed()) cfg.command = "report-schema";
  if (!algebra_file.empty()) cfg.algebra_file = algebra_file;

  try {
    cfg.params.m = bkit::parse_rat(m_text);
    cfg.params.c = bkit::parse_rat(c_text);
  } catch (const bkit::Error& err) {
    return config_error(err.code, err.what(), cfg.format);
  }

  const bkit::RunResult result = bkit::run(cfg);
  std::cout << result.output;
  return result.exit_code;
}
