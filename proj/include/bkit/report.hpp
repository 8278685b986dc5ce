#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bkit/rational.hpp"

namespace bkit {

using Json = nlohmann::ordered_json;

Json params_json(const Params& p);

// One verified statement. detail carries the residual / counterexample when
// the check fails (empty on success unless the check has something to say,
// e.g. a localized known discrepancy).
struct CheckItem {
  std::string description;
  bool pass = false;
  std::string detail;
};

// A named bundle of checks (Jacobi table, homomorphism pairs, ...).
struct Report {
  std::string subject;
  std::vector<CheckItem> checks;

  bool pass() const;
  Json to_json() const;
};

// One differing coefficient between two series/objects, keyed by the monomial.
struct Mismatch {
  std::string key;  // e.g. "w1^2 v2" or "entry(1,2) w1 v1"
  std::string lhs;
  std::string rhs;
};

// Coefficientwise comparison of two computations of the same object.
// Invariant: pass() iff mismatches is empty.
struct ComparisonReport {
  std::string subject;
  std::string lhs_source;
  std::string rhs_source;
  int cap = 0;
  Params params;
  std::vector<Mismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
  Json to_json() const;
};

// A theorem-level verdict: every clause of the statement as a CheckItem.
struct TheoremReport {
  std::string theorem;
  std::vector<Params> params;
  std::vector<CheckItem> checks;

  bool pass() const;
  Json to_json() const;
};

}  // namespace bkit
