#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "gmn/classifier.hpp"
#include "gmn/oracle.hpp"
#include "support/h_reference.hpp"

using namespace gmn;
using gmn_test::h_reference;

TEST_CASE("omega table has exactly 8 entries and matches the quadruples",
          "[classifier]") {
  CHECK(kOmegaTable.size() == 8);
  CHECK(check_omega(BsQuadruple{4, 13, 3, 2}));
  CHECK(check_omega(BsQuadruple{2, 7, 11, 3}));
  CHECK(check_omega(BsQuadruple{1, 2, 1, 3}));
  CHECK(check_omega(BsQuadruple{4, 7, 1, 2}));
  CHECK(check_omega(BsQuadruple{2, 1, 1, 5}));
  CHECK(check_omega(BsQuadruple{2, 1, 1, 13}));
  CHECK(check_omega(BsQuadruple{4, 1, 3, 7}));
  CHECK(check_omega(BsQuadruple{4, 7, 25, 2}));

  CHECK_FALSE(check_omega(BsQuadruple{1, 1, 2, 3}));
  CHECK_FALSE(check_omega(BsQuadruple{2, 7, 25, 2}));  // lambda^2 must match
  CHECK_FALSE(check_omega(BsQuadruple{4, 7, 25, 3}));
  CHECK_FALSE(check_omega(BsQuadruple{1, 7, 1, 2}));  // listed only at lambda^2 = 4
}

TEST_CASE("every omega quadruple admits at least two solutions", "[classifier]") {
  for (const OmegaEntry& e : kOmegaTable) {
    const BsQuadruple q{e.lambda_sq, e.d1, e.d2, e.p};
    const SolutionSet s = solve_bs_bounded(q, 40);
    CAPTURE(e.lambda_sq, e.d1, e.d2, e.p);
    CHECK(s.solutions.size() >= 2);
  }
  CHECK(solve_bs_bounded(BsQuadruple{4, 7, 25, 2}, 40).solutions ==
        std::vector<Solution>{Solution{1, 3}, Solution{17, 9}});
}

TEST_CASE("check_f golden witnesses", "[classifier]") {
  CHECK(check_f(2, 18, 5) == FWitness{5, +1});
  CHECK(check_f(13, 7, 5) == FWitness{5, -1});
  CHECK(check_f(1, 11, 3) == FWitness{4, +1});
  CHECK_FALSE(check_f(2, 18, 4).has_value());  // 4 is not a Fibonacci number
  CHECK_FALSE(check_f(3, 18, 5).has_value());
  CHECK_FALSE(check_f(2, 17, 5).has_value());
}

TEST_CASE("check_f recovers every generated F triple and honors the identity",
          "[classifier]") {
  for (unsigned k = 2; k <= 30; ++k) {
    const Natural p = fibonacci(k);
    for (int eps : {+1, -1}) {
      const long long lo = static_cast<long long>(k) - 2ll * eps;
      if (lo < 0) continue;
      const Natural d1 = fibonacci(static_cast<unsigned>(lo));
      const Natural d2 = lucas(k + eps);
      const auto w = check_f(d1, d2, p);
      REQUIRE(w.has_value());
      REQUIRE(w->k == k);
      REQUIRE(4 * p - d1 == d2);  // the identity, restated on the witness
      REQUIRE(fibonacci(static_cast<unsigned>(w->k) - 2 * w->eps) == d1);
      REQUIRE(lucas(w->k + w->eps) == d2);
      REQUIRE(fibonacci(w->k) == p);
    }
  }
}

TEST_CASE("check_g golden values and generated members", "[classifier]") {
  CHECK(check_g(1, 11, 3, 10) == 1u);
  CHECK_FALSE(check_g(1, 2, 3, 10).has_value());
  CHECK_FALSE(check_g(5, 19, 5, 10).has_value());
  CHECK_FALSE(check_g(1, 15, 2, 10).has_value());  // p must be odd
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 47u}) {
    Natural pw = 1;
    for (unsigned r = 1; r <= 8; ++r) {
      pw *= p;
      REQUIRE(check_g(1, 4 * pw - 1, p, 10) == r);
      REQUIRE_FALSE(check_g(1, 4 * pw - 2, p, 10).has_value());
    }
  }
  CHECK_FALSE(check_g(1, 4 * 3 * 3 - 1, 3, 1).has_value());  // r_max respected
}

TEST_CASE("check_h golden values", "[classifier]") {
  CHECK(check_h_bounded(BsQuadruple{1, 1, 2, 3}, 50, 50) == HWitness{1, 1});
  CHECK(check_h_bounded(BsQuadruple{1, 1, 4, 5}, 50, 50) == HWitness{1, 1});
  CHECK_FALSE(check_h_bounded(BsQuadruple{1, 3, 4, 7}, 50, 50).has_value());
  // p must be odd unless lambda^2 = 4
  CHECK_FALSE(check_h_bounded(BsQuadruple{1, 1, 7, 2}, 50, 50).has_value());
  CHECK_FALSE(check_h_bounded(BsQuadruple{2, 1, 7, 2}, 50, 50).has_value());
  // bounds are honored
  CHECK_FALSE(check_h_bounded(BsQuadruple{1, 1, 2, 3}, 50, 0).has_value());
}

TEST_CASE("check_h agrees with the double-loop reference on a medium grid",
          "[classifier]") {
  const auto primes = sieve_primes(200);
  for (unsigned lam2 : {1u, 2u, 4u}) {
    for (std::uint32_t p : primes) {
      if (p == 2) continue;
      for (std::uint64_t d1 = 1; d1 <= 60; ++d1) {
        if (std::gcd(d1, std::uint64_t(p)) != 1) continue;
        for (std::uint64_t d2 = 1; d2 <= 60; ++d2) {
          if (std::gcd(d1, d2) != 1 || std::gcd(d2, std::uint64_t(p)) != 1)
            continue;
          const auto got =
              check_h_bounded(BsQuadruple{lam2, d1, d2, p}, 50, 20);
          const auto want = h_reference(lam2, d1, d2, p, 50, 20);
          CAPTURE(lam2, d1, d2, p);
          REQUIRE(got.has_value() == want.has_value());
          if (got) {
            REQUIRE(got->s == want->first);
            REQUIRE(got->r == want->second);
          }
        }
      }
    }
  }
}

TEST_CASE("classify_pair golden verdicts", "[classifier]") {
  const Verdict p3 = classify_pair(1, 3);
  CHECK(p3.kind == VerdictKind::ExceptionalP3);
  CHECK(p3.predicted_solutions ==
        std::vector<Solution>{Solution{1, 1}, Solution{5, 3}});
  REQUIRE(p3.details.has_value());
  CHECK(p3.details->h_witness == HWitness{1, 1});

  const Verdict p5 = classify_pair(1, 5);
  CHECK(p5.kind == VerdictKind::ExceptionalP5);
  CHECK(p5.predicted_solutions ==
        std::vector<Solution>{Solution{1, 1}, Solution{11, 3}});

  CHECK(classify_pair(6, 7).kind == VerdictKind::NoSolutionEvenC);
  CHECK(classify_pair(3, 7).kind == VerdictKind::NoSolutionGcd);
  CHECK(classify_pair(9, 3).kind == VerdictKind::NoSolutionPDividesC);
  // gcd(5, 10) = 5, so (5, 11) has no solutions
  CHECK(classify_pair(5, 11).kind == VerdictKind::NoSolutionGcd);

  const Verdict generic = classify_pair(5, 7);
  CHECK(generic.kind == VerdictKind::AtMostOneGeneric);
  REQUIRE(generic.details.has_value());
  CHECK_FALSE(generic.details->omega_member);
  CHECK_FALSE(generic.details->f_witness.has_value());
  CHECK_FALSE(generic.details->g_exponent.has_value());
  CHECK_FALSE(generic.details->h_witness.has_value());
  CHECK(generic.note.empty());

  const Verdict one = classify_pair(1, 7);
  CHECK(one.kind == VerdictKind::AtMostOneGeneric);
  CHECK_FALSE(one.note.empty());  // records the trivial n = 1 representation

  CHECK(classify_pair(0, 3).kind == VerdictKind::InvalidInput);
  CHECK(classify_pair(1, 4).kind == VerdictKind::InvalidInput);
  CHECK(classify_pair(1, 1).kind == VerdictKind::InvalidInput);
}

TEST_CASE("classify_pair follows the descent order and is deterministic",
          "[classifier]") {
  using boost::multiprecision::gcd;
  for (std::uint32_t p : sieve_primes(60)) {
    for (std::uint64_t c = 1; c <= 60; ++c) {
      const Verdict v = classify_pair(c, p);
      VerdictKind expect;
      if (c % 2 == 0) expect = VerdictKind::NoSolutionEvenC;
      else if (c % p == 0) expect = VerdictKind::NoSolutionPDividesC;
      else if (std::gcd(c, std::uint64_t(p) - 1) != 1) expect = VerdictKind::NoSolutionGcd;
      else if (c == 1 && p == 3) expect = VerdictKind::ExceptionalP3;
      else if (c == 1 && p == 5) expect = VerdictKind::ExceptionalP5;
      else expect = VerdictKind::AtMostOneGeneric;
      CAPTURE(c, p);
      REQUIRE(v.kind == expect);
      REQUIRE(classify_pair(c, p) == v);
      if (v.kind == VerdictKind::AtMostOneGeneric) {
        // Omega never matches at lambda^2 = 1 (its only such entry needs
        // even c), F demands c = 3p + 1 which no Fibonacci triple reaches,
        // and G demands p - 1 = 4p^r - 1
        REQUIRE_FALSE(v.details->omega_member);
        REQUIRE_FALSE(v.details->f_witness.has_value());
        REQUIRE_FALSE(v.details->g_exponent.has_value());
      }
    }
  }
}

TEST_CASE("BsQuadruple validation", "[classifier]") {
  CHECK_NOTHROW(validate(BsQuadruple{1, 1, 2, 3}));
  CHECK_THROWS_AS(validate(BsQuadruple{3, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BsQuadruple{1, 0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BsQuadruple{1, 2, 18, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BsQuadruple{1, 8, 4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BsQuadruple{1, 1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BsQuadruple{1, 3, 1, 3}), std::invalid_argument);
}

TEST_CASE("verdict kind strings round-trip", "[classifier]") {
  for (VerdictKind k :
       {VerdictKind::InvalidInput, VerdictKind::NoSolutionEvenC,
        VerdictKind::NoSolutionGcd, VerdictKind::NoSolutionPDividesC,
        VerdictKind::ExceptionalP3, VerdictKind::ExceptionalP5,
        VerdictKind::AtMostOneGeneric})
    CHECK(verdict_kind_from_string(to_string(k)) == k);
  CHECK_FALSE(verdict_kind_from_string("NotAKind").has_value());
}
