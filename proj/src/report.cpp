#include "bkit/report.hpp"

namespace bkit {

Json params_json(const Params& p) {
  return Json{{"m", rat_str(p.m)}, {"c", rat_str(p.c)}};
}

static Json checks_json(const std::vector<CheckItem>& checks) {
  Json arr = Json::array();
  for (const auto& ch : checks) {
    Json item{{"description", ch.description}, {"pass", ch.pass}};
    if (!ch.detail.empty()) item["residual"] = ch.detail;
    arr.push_back(item);
  }
  return arr;
}

bool Report::pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

Json Report::to_json() const {
  return Json{{"subject", subject},
              {"pass", pass()},
              {"checks", checks_json(checks)}};
}

Json ComparisonReport::to_json() const {
  Json mm = Json::array();
  for (const auto& m : mismatches)
    mm.push_back(Json{{"key", m.key}, {"lhs", m.lhs}, {"rhs", m.rhs}});
  return Json{{"subject", subject}, {"pass", pass()},
              {"lhs", lhs_source},  {"rhs", rhs_source},
              {"cap", cap},         {"params", params_json(params)},
              {"mismatches", mm}};
}

bool TheoremReport::pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

Json TheoremReport::to_json() const {
  Json ps = Json::array();
  for (const auto& p : params) ps.push_back(params_json(p));
  return Json{{"theorem", theorem},
              {"pass", pass()},
              {"params", ps},
              {"checks", checks_json(checks)}};
}

}  // namespace bkit
