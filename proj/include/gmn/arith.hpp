#pragma once

// Exact arbitrary-precision arithmetic utilities: integer square root,
// perfect-square testing, primality, factorization, squarefree
// decomposition, and the Fibonacci/Lucas sequences. Everything here is a
// pure function of its inputs; no floating point appears in any
// correctness path.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmn {

/// Arbitrary-precision nonnegative integer, the universal scalar.
using Natural = boost::multiprecision::cpp_int;

/// Fixed default seed for the randomized strong-probable-prime rounds, so
/// that runs are reproducible unless the caller chooses otherwise.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

// ---------------------------------------------------------------------------
// Integer square root and perfect squares

/// floor(sqrt(n)) by integer Newton iteration with an exact termination
/// check: the result r always satisfies r^2 <= n < (r+1)^2.
inline Natural isqrt(const Natural& n) {
  if (n < 0) throw std::domain_error("isqrt: input must be nonnegative");
  if (n == 0) return Natural(0);
  const unsigned bits = boost::multiprecision::msb(n) + 1u;
  Natural x = Natural(1) << (bits / 2 + 1);  // strictly above sqrt(n)
  for (;;) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  // settle exactly: x^2 <= n < (x+1)^2
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// The root r with r^2 == n if n is a perfect square, absent otherwise.
inline std::optional<Natural> is_square(const Natural& n) {
  if (n < 0) return std::nullopt;
  // squares mod 16 are 0, 1, 4 or 9
  constexpr std::uint16_t mask = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 9);
  const unsigned low = (n & 15).convert_to<unsigned>();
  if (((mask >> low) & 1u) == 0) return std::nullopt;
  Natural r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Primality

/// Outcome of a primality test. `probabilistic` is set when the verdict
/// rests on randomized rounds instead of a deterministic witness set.
struct PrimalityResult {
  bool prime = false;
  bool probabilistic = false;
};

/// Primes <= limit, ascending (sieve of Eratosthenes).
inline std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(std::size_t(limit) + 1, false);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
      composite[std::size_t(j)] = true;
  }
  return primes;
}

namespace detail {

/// Below this bound the first-13-primes witness set is deterministic
/// (Sorenson & Webster, 3.3e24).
inline const Natural& mr_certainty_bound() {
  static const Natural bound("3317044064679887385961981");
  return bound;
}

// One strong-probable-prime round; true means `base` proves n composite.
inline bool mr_composite(const Natural& n, const Natural& base,
                         const Natural& odd_part, unsigned two_exp) {
  const Natural a = base % n;
  if (a == 0) return false;
  Natural x = boost::multiprecision::powm(a, odd_part, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < two_exp; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

/// Uniform draw from [0, bound), unbiased by rejection sampling.
inline Natural random_below(std::mt19937_64& rng, const Natural& bound) {
  if (bound < 1) throw std::domain_error("random_below: empty range");
  const unsigned bits = boost::multiprecision::msb(bound) + 1u;
  const unsigned words = (bits + 63) / 64;
  const unsigned top = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << top) - 1);
  for (;;) {
    Natural r = rng() & top_mask;
    for (unsigned w = 1; w < words; ++w) {
      r <<= 64;
      r |= rng();
    }
    if (r < bound) return r;
  }
}

inline const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(1'000'000);
  return primes;
}

}  // namespace detail

/// Strong-probable-prime primality test. Deterministic for all
/// n < 3317044064679887385961981 via published witness-set bounds
/// (Jaeschke; Sorenson & Webster); above that, `extra_rounds` seeded
/// random bases are added and the verdict is flagged probabilistic.
inline PrimalityResult primality(const Natural& n,
                                 std::uint64_t seed = kDefaultSeed,
                                 unsigned extra_rounds = 40) {
  static constexpr std::array<std::uint32_t, 13> witnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return {false, false};
  for (std::uint32_t q : witnesses) {
    if (n == q) return {true, false};
    if (n % q == 0) return {false, false};
  }
  Natural odd = n - 1;
  const unsigned two_exp = boost::multiprecision::lsb(odd);
  odd >>= two_exp;

  // deterministic tiers: how many of the first witnesses suffice
  static const std::array<std::pair<Natural, unsigned>, 5> tiers = {{
      {Natural(2'047), 1},
      {Natural(1'373'653), 2},
      {Natural(25'326'001), 3},
      {Natural("3215031751"), 4},
      {Natural("318665857834031151167461"), 12},
  }};
  unsigned needed = 13;
  for (const auto& [bound, count] : tiers) {
    if (n < bound) {
      needed = count;
      break;
    }
  }
  for (unsigned i = 0; i < needed; ++i)
    if (detail::mr_composite(n, witnesses[i], odd, two_exp))
      return {false, false};
  if (n < detail::mr_certainty_bound()) return {true, false};

  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < extra_rounds; ++i) {
    const Natural base = 2 + detail::random_below(rng, n - 3);
    if (detail::mr_composite(n, base, odd, two_exp)) return {false, false};
  }
  return {true, true};
}

inline bool is_prime(const Natural& n, std::uint64_t seed = kDefaultSeed) {
  return primality(n, seed).prime;
}

// ---------------------------------------------------------------------------
// Factorization and squarefree decomposition

/// Effort limits for factorize(). Exceeding them is not an error: the
/// result is returned with complete = false instead.
struct FactorBudget {
  std::uint32_t trial_division_limit = 1'000'000;
  std::uint64_t rho_iteration_cap = 4'000'000;
  std::uint64_t seed = kDefaultSeed;  // for probable-prime certification
};

struct Factorization {
  /// (prime, exponent), primes strictly ascending.
  std::vector<std::pair<Natural, unsigned>> prime_powers;
  /// composite-or-unknown cofactors left over when the budget ran out
  std::vector<std::pair<Natural, unsigned>> unfactored;
  bool complete = true;
  bool probabilistic = false;

  Natural product() const {
    Natural v = 1;
    for (const auto& [p, e] : prime_powers) v *= boost::multiprecision::pow(p, e);
    for (const auto& [q, e] : unfactored) v *= boost::multiprecision::pow(q, e);
    return v;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

class IncompleteFactorization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Pollard rho with Brent cycle detection, f(x) = x^2 + add. Deterministic;
// consumes iterations from `budget`. Returns a nontrivial factor or 0.
inline Natural rho_brent(const Natural& n, std::uint64_t& budget) {
  using boost::multiprecision::gcd;
  for (unsigned add = 1; budget > 0; ++add) {
    Natural y = 2, q = 1, g = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + add) % n;
      for (std::uint64_t k = 0; k < r && g == 1 && budget > 0; k += 128) {
        ys = y;
        const std::uint64_t span = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < span && budget > 0; ++i) {
          y = (y * y + add) % n;
          q = q * (x > y ? x - y : y - x) % n;
          --budget;
        }
        g = gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      // redo the last batch one step at a time
      g = 1;
      for (unsigned i = 0; i < 256 && g == 1; ++i) {
        ys = (ys * ys + add) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g > 1 && g < n) return g;
  }
  return Natural(0);
}

}  // namespace detail

/// Factor n >= 1 by trial division up to the budget's limit, then Brent
/// rho with an iteration cap. Never loops forever: cofactors that resist
/// the budget are reported in `unfactored` and complete is set to false.
inline Factorization factorize(const Natural& n, const FactorBudget& budget = {}) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  std::map<Natural, unsigned> found;
  Natural m = n;

  const std::vector<std::uint32_t> wide =
      budget.trial_division_limit > 1'000'000
          ? sieve_primes(budget.trial_division_limit)
          : std::vector<std::uint32_t>{};
  const std::vector<std::uint32_t>& trial =
      wide.empty() ? detail::trial_primes() : wide;
  for (std::uint32_t q : trial) {
    if (q > budget.trial_division_limit) break;
    if (Natural(q) * q > m) break;
    if (m % q == 0) {
      unsigned e = 0;
      do {
        m /= q;
        ++e;
      } while (m % q == 0);
      found[q] += e;
    }
  }

  if (m > 1) {
    std::vector<std::pair<Natural, unsigned>> work{{m, 1}};
    std::vector<std::pair<Natural, unsigned>> stuck;
    std::uint64_t rho_budget = budget.rho_iteration_cap;
    while (!work.empty()) {
      auto [v, e] = work.back();
      work.pop_back();
      const PrimalityResult pr = primality(v, budget.seed);
      if (pr.prime) {
        found[v] += e;
        out.probabilistic |= pr.probabilistic;
        continue;
      }
      if (auto root = is_square(v)) {
        work.emplace_back(*root, 2 * e);
        continue;
      }
      const Natural f =
          rho_budget > 0 ? detail::rho_brent(v, rho_budget) : Natural(0);
      if (f <= 1 || f >= v) {
        stuck.emplace_back(v, e);
        continue;
      }
      work.emplace_back(f, e);
      work.emplace_back(v / f, e);
    }
    std::sort(stuck.begin(), stuck.end());
    out.unfactored = std::move(stuck);
  }

  out.prime_powers.assign(found.begin(), found.end());
  out.complete = out.unfactored.empty();
  return out;
}

/// N = squarefree_part * root^2 with the squarefree part squarefree and
/// the root maximal.
struct SquareDecomposition {
  Natural squarefree_part;
  Natural root;

  friend bool operator==(const SquareDecomposition&,
                         const SquareDecomposition&) = default;
};

/// Unique decomposition n = c * x^2 with c squarefree. Throws
/// IncompleteFactorization when the budget is insufficient; callers may
/// retry with a larger one.
inline SquareDecomposition squarefree_decompose(const Natural& n,
                                                const FactorBudget& budget = {}) {
  const Factorization f = factorize(n, budget);
  if (!f.complete)
    throw IncompleteFactorization(
        "squarefree_decompose: cofactor " + f.unfactored.front().first.str() +
        " not factored within budget; retry with a larger budget");
  SquareDecomposition d{1, 1};
  for (const auto& [p, e] : f.prime_powers) {
    if (e & 1u) d.squarefree_part *= p;
    d.root *= boost::multiprecision::pow(p, e / 2);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Fibonacci and Lucas sequences

/// F_0 = 0, F_1 = 1, F_{k+2} = F_k + F_{k+1}.
inline Natural fibonacci(unsigned k) {
  Natural a = 0, b = 1;
  for (; k > 0; --k) {
    Natural t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// L_0 = 2, L_1 = 1, L_{k+2} = L_k + L_{k+1}.
inline Natural lucas(unsigned k) {
  Natural a = 2, b = 1;
  for (; k > 0; --k) {
    Natural t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Smallest k >= 2 with F_k == m, absent when m is not a Fibonacci number.
/// The F_1 = F_2 = 1 ambiguity resolves to k = 2.
inline std::optional<unsigned> fibonacci_index(const Natural& m) {
  if (m < 1) return std::nullopt;
  Natural fk = 1, fk1 = 2;  // F_2, F_3
  unsigned k = 2;
  while (fk < m) {
    Natural t = fk + fk1;
    fk = std::move(fk1);
    fk1 = std::move(t);
    ++k;
  }
  if (fk == m) return k;
  return std::nullopt;
}

/// Checks the identity 4*F_k - F_{k-2*eps} == L_{k+eps} for eps = +-1.
/// Requires k >= 2 and k - 2*eps >= 0.
inline bool lucas_identity_holds(unsigned k, int eps) {
  if (eps != 1 && eps != -1)
    throw std::domain_error("lucas_identity_holds: eps must be +1 or -1");
  const long long lo = static_cast<long long>(k) - 2ll * eps;
  if (k < 2 || lo < 0)
    throw std::domain_error(
        "lucas_identity_holds: need k >= 2 and k - 2*eps >= 0");
  const unsigned hi = static_cast<unsigned>(static_cast<long long>(k) + eps);
  return 4 * fibonacci(k) - fibonacci(static_cast<unsigned>(lo)) == lucas(hi);
}

}  // namespace gmn
