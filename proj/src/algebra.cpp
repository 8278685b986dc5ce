#include "bkit/algebra.hpp"

#include <deque>

namespace bkit {

EnvElement EnvElement::zero() { return EnvElement{}; }

EnvElement EnvElement::unit(const Rat& scalar) {
  EnvElement e;
  e.add_term({}, scalar);
  return e;
}

EnvElement EnvElement::gen(const std::string& name) {
  EnvElement e;
  e.add_term({name}, Rat(1));
  return e;
}

EnvElement& EnvElement::add_term(const Word& word, const Rat& coeff) {
  if (coeff == 0) return *this;
  auto it = terms.find(word);
  if (it == terms.end()) {
    terms.emplace(word, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

std::string EnvElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [word, coeff] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (const auto& g : word) {
      if (!mono.empty()) mono += "*";
      mono += g;
    }
    if (mono.empty())
      out += rat_str(coeff);
    else if (coeff == 1)
      out += mono;
    else
      out += rat_str(coeff) + " " + mono;
  }
  return out;
}

EnvElement operator+(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, c);
  return out;
}

EnvElement operator-(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, -c);
  return out;
}

EnvElement operator*(const EnvElement& a, const EnvElement& b) {
  EnvElement out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

EnvElement operator*(const Rat& s, const EnvElement& a) {
  EnvElement out;
  for (const auto& [w, c] : a.terms) out.add_term(w, s * c);
  return out;
}

bool operator==(const EnvElement& a, const EnvElement& b) {
  return a.terms == b.terms;
}

int LieAlgebraSpec::index_of(const std::string& generator) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == generator) return static_cast<int>(i);
  return -1;
}

EnvElement LieAlgebraSpec::basis_bracket(int i, int j) const {
  if (i == j) return EnvElement::zero();
  if (i < j) {
    auto it = brackets.find({i, j});
    return it == brackets.end() ? EnvElement::zero() : it->second;
  }
  auto it = brackets.find({j, i});
  return it == brackets.end() ? EnvElement::zero() : Rat(-1) * it->second;
}

void LieAlgebraSpec::set_bracket(const std::string& a, const std::string& b,
                                 const EnvElement& value) {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0)
    throw Error("unknown-generator",
                "bracket (" + a + ", " + b + ") uses a generator outside the basis");
  if (ia == ib) {
    if (!value.is_zero())
      throw Error("bad-bracket", "nonzero bracket [" + a + ", " + a + "]");
    return;
  }
  if (value.is_zero()) return;
  if (ia < ib)
    brackets[{ia, ib}] = value;
  else
    brackets[{ib, ia}] = Rat(-1) * value;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"hw", "sl2", "schrodinger"};
  return names;
}

LieAlgebraSpec builtin(const std::string& name) {
  auto g = [](const std::string& s) { return EnvElement::gen(s); };
  if (name == "hw") {
    LieAlgebraSpec alg;
    alg.name = "hw";
    alg.basis = {"H", "X", "P"};
    alg.central = {"H"};
    alg.set_bracket("P", "X", g("H"));
    return alg;
  }
  if (name == "sl2") {
    LieAlgebraSpec alg;
    alg.name = "sl2";
    alg.basis = {"rho", "R", "L"};
    alg.set_bracket("rho", "R", Rat(2) * g("R"));
    alg.set_bracket("L", "rho", Rat(2) * g("L"));
    alg.set_bracket("L", "R", g("rho"));
    return alg;
  }
  if (name == "schrodinger") {
    LieAlgebraSpec alg;
    alg.name = "schrodinger";
    alg.basis = {"M", "K", "G", "D", "P_x", "P_t"};
    alg.central = {"M"};
    alg.set_bracket("D", "K", Rat(2) * g("K"));
    alg.set_bracket("P_x", "K", g("G"));
    alg.set_bracket("P_t", "K", g("D"));
    alg.set_bracket("D", "G", g("G"));
    alg.set_bracket("P_x", "G", g("M"));
    alg.set_bracket("P_t", "G", g("P_x"));
    alg.set_bracket("D", "P_x", Rat(-1) * g("P_x"));
    alg.set_bracket("D", "P_t", Rat(-2) * g("P_t"));
    return alg;
  }
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown-algebra",
              "unknown algebra '" + name + "' (known: " + known + ")");
}

static void validate_words(const EnvElement& e, const LieAlgebraSpec& alg) {
  for (const auto& [word, coeff] : e.terms) {
    (void)coeff;
    for (const auto& gname : word)
      if (alg.index_of(gname) < 0)
        throw Error("unknown-generator", "generator '" + gname +
                                             "' is not in the basis of '" +
                                             alg.name + "'");
  }
}

EnvElement pbw_normalize(const EnvElement& e, const LieAlgebraSpec& alg) {
  validate_words(e, alg);
  EnvElement out;
  std::deque<std::pair<Word, Rat>> work(e.terms.begin(), e.terms.end());
  while (!work.empty()) {
    auto [word, coeff] = work.front();
    work.pop_front();
    size_t k = 0;
    bool sorted = true;
    for (; k + 1 < word.size(); ++k)
      if (alg.index_of(word[k]) > alg.index_of(word[k + 1])) {
        sorted = false;
        break;
      }
    if (sorted) {
      out.add_term(word, coeff);
      continue;
    }
    // x y -> y x + [x, y] at the leftmost inversion.
    Word swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    work.emplace_back(swapped, coeff);
    EnvElement br =
        alg.basis_bracket(alg.index_of(word[k]), alg.index_of(word[k + 1]));
    for (const auto& [bw, bc] : br.terms) {
      Word w(word.begin(), word.begin() + k);
      w.insert(w.end(), bw.begin(), bw.end());
      w.insert(w.end(), word.begin() + k + 2, word.end());
      work.emplace_back(w, coeff * bc);
    }
  }
  return out;
}

EnvElement bracket(const EnvElement& a, const EnvElement& b,
                   const LieAlgebraSpec& alg) {
  return pbw_normalize(a * b - b * a, alg);
}

Report verify_jacobi(const LieAlgebraSpec& alg) {
  Report report;
  report.subject = "jacobi(" + alg.name + ")";
  const int n = static_cast<int>(alg.basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        EnvElement ei = EnvElement::gen(alg.basis[i]);
        EnvElement ej = EnvElement::gen(alg.basis[j]);
        EnvElement ek = EnvElement::gen(alg.basis[k]);
        EnvElement residual = bracket(bracket(ei, ej, alg), ek, alg) +
                              bracket(bracket(ej, ek, alg), ei, alg) +
                              bracket(bracket(ek, ei, alg), ej, alg);
        CheckItem item;
        item.description = "jacobi(" + alg.basis[i] + ", " + alg.basis[j] +
                           ", " + alg.basis[k] + ")";
        item.pass = residual.is_zero();
        if (!item.pass) item.detail = residual.str();
        report.checks.push_back(item);
      }
  return report;
}

Json algebra_to_json(const LieAlgebraSpec& alg) {
  Json brackets = Json::array();
  for (const auto& [ij, value] : alg.brackets) {
    Json result = Json::array();
    for (const auto& [word, coeff] : value.terms)
      result.push_back(Json{{"coeff", rat_str(coeff)}, {"word", word}});
    brackets.push_back(Json{{"i", alg.basis[ij.first]},
                            {"j", alg.basis[ij.second]},
                            {"result", result}});
  }
  return Json{{"name", alg.name},
              {"basis", alg.basis},
              {"brackets", brackets},
              {"central", std::vector<std::string>(alg.central.begin(),
                                                   alg.central.end())}};
}

LieAlgebraSpec algebra_from_json(const Json& doc) {
  try {
    LieAlgebraSpec alg;
    alg.name = doc.at("name").get<std::string>();
    alg.basis = doc.at("basis").get<std::vector<std::string>>();
    std::set<std::string> seen(alg.basis.begin(), alg.basis.end());
    if (seen.size() != alg.basis.size())
      throw Error("bad-algebra-file", "duplicate generator in basis");
    if (doc.contains("central"))
      for (const auto& c : doc.at("central")) {
        std::string gname = c.get<std::string>();
        if (alg.index_of(gname) < 0)
          throw Error("bad-algebra-file",
                      "central generator '" + gname + "' not in basis");
        alg.central.insert(gname);
      }
    for (const auto& entry : doc.at("brackets")) {
      EnvElement value;
      for (const auto& term : entry.at("result"))
        value.add_term(term.at("word").get<Word>(),
                       parse_rat(term.at("coeff").get<std::string>()));
      validate_words(value, alg);
      const std::string i = entry.at("i").get<std::string>();
      const std::string j = entry.at("j").get<std::string>();
      int ia = alg.index_of(i), ib = alg.index_of(j);
      if (ia < 0 || ib < 0)
        throw Error("bad-algebra-file", "bracket (" + i + ", " + j +
                                            ") uses a generator not in basis");
      // Entries may come in either orientation; a repeated or mirrored pair
      // must agree with what is already stored (antisymmetry).
      EnvElement canonical = ia < ib ? value : Rat(-1) * value;
      auto key = std::make_pair(std::min(ia, ib), std::max(ia, ib));
      auto it = alg.brackets.find(key);
      if (it != alg.brackets.end() && !(it->second == canonical))
        throw Error("bad-algebra-file",
                    "conflicting entries for bracket (" + i + ", " + j + ")");
      if (ia == ib) {
        if (!value.is_zero())
          throw Error("bad-algebra-file", "nonzero bracket [" + i + ", " + i + "]");
        continue;
      }
      if (!canonical.is_zero()) alg.brackets[key] = canonical;
    }
    return alg;
  } catch (const Json::exception& ex) {
    throw Error("bad-algebra-file",
                std::string("malformed algebra document: ") + ex.what());
  }
}

}  // namespace bkit
