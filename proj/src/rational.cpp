#include "bkit/rational.hpp"

#include <cctype>

namespace bkit {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] == '+' || s[0] == '-') return digits_only(s.substr(1));
  return digits_only(s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);
  if (!valid_integer(num) || (slash != std::string::npos && !digits_only(den)))
    throw Error("bad-rational",
                "not a rational 'p' or 'p/q': '" + text + "'");
  std::string plain = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(plain, 10) != 0)
    throw Error("bad-rational",
                "not a rational 'p' or 'p/q': '" + text + "'");
  if (q.get_den() == 0)
    throw Error("bad-rational", "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat factorial(long n) {
  if (n < 0) throw Error("bad-argument", "factorial of negative argument");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(z);
}

Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(z);
}

std::vector<Params> params_grid() {
  return {Params{Rat(1), Rat(1)}, Params{Rat(3, 2), Rat(5, 7)},
          Params{Rat(2), Rat(1, 2)}};
}

}  // namespace bkit
