#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkit {

// Every quantity in this library is an exact rational. Rat is GMP's
// canonicalizing rational wrapper; no floating point appears anywhere.
using Rat = mpq_class;

// Library error with a stable machine-readable code ("unknown-algebra",
// "pair-mismatch", "truncation-insufficient", ...) next to the human message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& message)
      : std::runtime_error(message), code(std::move(c)) {}
};

// Parse "p" or "p/q" (optional sign, decimal digits). Throws Error
// ("bad-rational") on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical string form, "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string rat_str(const Rat& q);

Rat factorial(long n);
Rat binomial(long n, long k);

// Representation parameters: m is the scalar value of the central generator
// (H for the Heisenberg-Weyl algebra, M for the Schroedinger algebra), c the
// vacuum eigenvalue of the grading generator (rho, respectively D).
struct Params {
  Rat m{1};
  Rat c{1};
};

// The fixed evaluation grid used by --params-grid and the acceptance checks.
std::vector<Params> params_grid();

}  // namespace bkit
