#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gmn/arith.hpp"

using namespace gmn;

TEST_CASE("isqrt golden values", "[arith]") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(25) == 5);
  CHECK(isqrt(26) == 5);
  CHECK(isqrt(35) == 5);
  CHECK(isqrt(36) == 6);
  CHECK_THROWS_AS(isqrt(Natural(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing on random naturals up to 2^256", "[arith]") {
  std::mt19937_64 rng(20240811);
  const Natural bound = Natural(1) << 256;
  for (int i = 0; i < 10'000; ++i) {
    const Natural n = detail::random_below(rng, bound);
    const Natural r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("is_square agrees with isqrt for all n <= 10^6", "[arith]") {
  CHECK(is_square(121).value() == 11);
  CHECK(is_square(1).value() == 1);
  CHECK_FALSE(is_square(26).has_value());
  for (std::uint32_t n = 0; n <= 1'000'000; ++n) {
    const Natural r = isqrt(n);
    const auto sq = is_square(n);
    if (r * r == n) {
      REQUIRE(sq.has_value());
      REQUIRE(*sq * *sq == n);
    } else {
      REQUIRE_FALSE(sq.has_value());
    }
  }
}

TEST_CASE("is_prime golden values", "[arith]") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(337));  // trial division to isqrt(337) finds no divisor
  CHECK_FALSE(is_prime(341));
  CHECK(is_prime(Natural("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Natural("2305843009213693951") * Natural("618970019642690137449562111")));
}

TEST_CASE("is_prime agrees with trial division for all n <= 10^6", "[arith]") {
  const std::uint32_t limit = 1'000'000;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint32_t n = 0; n <= limit; ++n) {
    const bool expect = n >= 2 && !composite[n];
    if (is_prime(n) != expect) {
      CAPTURE(n);
      REQUIRE(is_prime(n) == expect);
    }
  }
}

TEST_CASE("primality flags probabilistic verdicts above the deterministic bound",
          "[arith]") {
  // below the bound: deterministic either way
  CHECK_FALSE(primality(997).probabilistic);
  CHECK_FALSE(primality(998).probabilistic);
  // 2^127 - 1 is prime and exceeds 3.3e24: verdict is flagged
  const Natural m127("170141183460469231731687303715884105727");
  const PrimalityResult r = primality(m127);
  CHECK(r.prime);
  CHECK(r.probabilistic);
  // a composite above the bound is still proven composite
  const PrimalityResult c = primality(m127 + 2);
  CHECK_FALSE(c.prime);
  CHECK_FALSE(c.probabilistic);
  // seeded runs are reproducible
  CHECK(primality(m127, 42).prime == primality(m127, 42).prime);
}

TEST_CASE("factorize golden values", "[arith]") {
  using PP = std::vector<std::pair<Natural, unsigned>>;
  CHECK(factorize(12).prime_powers == PP{{2, 2}, {3, 1}});
  CHECK(factorize(12).complete);
  CHECK(factorize(1).prime_powers.empty());
  CHECK(factorize(1).complete);
  CHECK(factorize(2047).prime_powers == PP{{23, 1}, {89, 1}});
  const Factorization big = factorize(Natural("6277101735386680763835789423207666416102355444464034512896") - 1);
  CHECK(big.complete);
  CHECK(big.product() == Natural("6277101735386680763835789423207666416102355444464034512895"));
}

TEST_CASE("factorize reports budget exhaustion in-band", "[arith]") {
  // product of two 40-digit primes; hopeless for trial division + capped rho
  const Natural p1("2425967623052370772757633156976982469681");
  const Natural p2("1451730470513778492236629598992166035067");
  FactorBudget tiny;
  tiny.trial_division_limit = 1000;
  tiny.rho_iteration_cap = 2000;
  const Factorization f = factorize(p1 * p2, tiny);
  CHECK_FALSE(f.complete);
  REQUIRE(f.unfactored.size() == 1);
  CHECK(f.unfactored.front().first == p1 * p2);
  CHECK(f.product() == p1 * p2);
  CHECK_THROWS_AS(squarefree_decompose(p1 * p2, tiny), IncompleteFactorization);
}

TEST_CASE("squarefree decomposition golden values", "[arith]") {
  CHECK(squarefree_decompose(121) == SquareDecomposition{1, 11});
  CHECK(squarefree_decompose(1) == SquareDecomposition{1, 1});
  CHECK(squarefree_decompose(63) == SquareDecomposition{7, 3});
  CHECK(squarefree_decompose(337) == SquareDecomposition{337, 1});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization and squarefree invariants for all n <= 10^5", "[arith]") {
  for (std::uint32_t n = 1; n <= 100'000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(f.complete);
    REQUIRE(f.product() == n);
    for (std::size_t i = 1; i < f.prime_powers.size(); ++i)
      REQUIRE(f.prime_powers[i - 1].first < f.prime_powers[i].first);

    const SquareDecomposition d = squarefree_decompose(n);
    REQUIRE(d.squarefree_part * d.root * d.root == n);
    // independent squarefree check by trial division
    const std::uint64_t c = d.squarefree_part.convert_to<std::uint64_t>();
    for (std::uint64_t q = 2; q * q <= c; ++q)
      REQUIRE(c % (q * q) != 0);
  }
}

TEST_CASE("fibonacci and lucas golden values", "[arith]") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(6) == 18);
}

TEST_CASE("sequence recurrences and the Lucas identity up to k = 300", "[arith]") {
  for (unsigned k = 0; k + 2 <= 300; ++k) {
    REQUIRE(fibonacci(k + 2) == fibonacci(k) + fibonacci(k + 1));
    REQUIRE(lucas(k + 2) == lucas(k) + lucas(k + 1));
  }
  for (unsigned k = 2; k <= 300; ++k)
    for (int eps : {+1, -1}) REQUIRE(lucas_identity_holds(k, eps));
}

TEST_CASE("lucas_identity_holds rejects out-of-domain arguments", "[arith]") {
  CHECK_THROWS_AS(lucas_identity_holds(1, 1), std::domain_error);
  CHECK_THROWS_AS(lucas_identity_holds(0, -1), std::domain_error);
  CHECK_THROWS_AS(lucas_identity_holds(5, 2), std::domain_error);
  CHECK(lucas_identity_holds(2, 1));   // 4*1 - F_0 = 4 = L_3
  CHECK(lucas_identity_holds(2, -1));  // 4*1 - F_4 = 1 = L_1
}

TEST_CASE("fibonacci_index golden values and round trip", "[arith]") {
  CHECK(fibonacci_index(1) == 2u);
  CHECK(fibonacci_index(13) == 7u);
  CHECK_FALSE(fibonacci_index(4).has_value());
  CHECK_FALSE(fibonacci_index(0).has_value());
  for (unsigned k = 2; k <= 300; ++k) {
    REQUIRE(fibonacci_index(fibonacci(k)) == k);
    REQUIRE_FALSE(fibonacci_index(fibonacci(k) + (k > 4 ? 1 : 100)).has_value());
  }
}

TEST_CASE("sieve_primes matches known counts", "[arith]") {
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(2) == std::vector<std::uint32_t>{2});
  CHECK(sieve_primes(30) ==
        std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(sieve_primes(100).size() == 25);
  CHECK(sieve_primes(1'000'000).size() == 78'498);
}
