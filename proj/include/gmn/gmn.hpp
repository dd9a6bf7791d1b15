#pragma once

// Generalized Mersenne numbers M_{p,n} = p^n - p + 1 and their c*x^2
// representations. The representation test is factorization-free so huge
// values stay cheap to scan.

#include <optional>
#include <stdexcept>

#include "gmn/arith.hpp"

namespace gmn {

/// Exponent cap for value construction; keeps memory bounded.
inline constexpr unsigned kMaxExponent = 10'000;

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M_{p,n} = p^n - p + 1 for prime p and n >= 1. The value is always odd,
/// and n = 1 gives 1.
struct GmNumber {
  Natural p;
  unsigned n = 1;
  Natural value;

  friend bool operator==(const GmNumber&, const GmNumber&) = default;
};

inline GmNumber gmn_value(const Natural& p, unsigned n,
                          unsigned max_exponent = kMaxExponent) {
  if (n < 1 || n > max_exponent)
    throw std::invalid_argument("gmn_value: exponent n out of range [1, " +
                                std::to_string(max_exponent) + "]");
  if (!is_prime(p))
    throw NotPrimeError("gmn_value: p = " + p.str() + " is not prime");
  return GmNumber{p, n, boost::multiprecision::pow(p, n) - p + 1};
}

/// The x >= 1 with gm.value == c * x^2, if any. Pure divisibility plus a
/// perfect-square test; no factorization.
inline std::optional<Natural> represent_as(const GmNumber& gm, const Natural& c) {
  if (c < 1) throw std::invalid_argument("represent_as: c must be >= 1");
  if (gm.value % c != 0) return std::nullopt;
  return is_square(gm.value / c);
}

/// A witnessed representation gm.value == c * x^2 (c is always odd since
/// every M_{p,n} is odd).
struct Representation {
  Natural c;
  Natural x;
  GmNumber gm;

  friend bool operator==(const Representation&, const Representation&) = default;
};

inline std::optional<Representation> make_representation(const GmNumber& gm,
                                                         const Natural& c) {
  auto x = represent_as(gm, c);
  if (!x) return std::nullopt;
  return Representation{c, *x, gm};
}

/// Canonical decomposition gm.value = c * x^2 with c squarefree. Only
/// sensible for moderate values (factoring limits apply); propagates
/// IncompleteFactorization when the budget runs out.
inline SquareDecomposition gmn_decompose(const GmNumber& gm,
                                         const FactorBudget& budget = {}) {
  return squarefree_decompose(gm.value, budget);
}

}  // namespace gmn
