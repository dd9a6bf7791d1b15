#pragma once

// Independent brute-force enumeration of bounded solution sets, plus grid
// scans that cross-check every classifier verdict against enumeration.
// Every emitted solution is re-substituted into its equation before it is
// reported. Scans fan out over worker threads and merge deterministically
// (rows sorted by (c, p)).

#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "gmn/arith.hpp"
#include "gmn/classifier.hpp"
#include "gmn/gmn.hpp"

namespace gmn {

/// The specialized equation c*x^2 + (p - 1) = p^n, i.e. M_{p,n} = c*x^2.
struct GmnEquation {
  Natural c;
  Natural p;

  friend bool operator==(const GmnEquation&, const GmnEquation&) = default;
};

using Equation = std::variant<BsQuadruple, GmnEquation>;

struct SolutionSet {
  Equation equation;
  unsigned exponent_max = 0;
  std::vector<Solution> solutions;  // sorted by exponent, no duplicates

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// All (x, y) with 1 <= y <= y_max and D1*x^2 + D2 = lambda^2*p^y.
inline SolutionSet solve_bs_bounded(const BsQuadruple& q, unsigned y_max) {
  validate(q);
  if (y_max < 1) throw std::invalid_argument("solve_bs_bounded: y_max must be >= 1");
  SolutionSet out{q, y_max, {}};
  Natural pw = 1;
  for (unsigned y = 1; y <= y_max; ++y) {
    pw *= q.p;
    const Natural t = q.lambda_sq * pw - q.d2;
    if (t < q.d1) continue;
    if (t % q.d1 != 0) continue;
    if (const auto x = is_square(t / q.d1)) {
      if (q.d1 * *x * *x + q.d2 != q.lambda_sq * pw)
        throw std::logic_error("solve_bs_bounded: re-substitution failed");
      out.solutions.push_back(Solution{*x, y});
    }
  }
  return out;
}

/// All (x, n) with 1 <= n <= n_max and M_{p,n} = c*x^2.
inline SolutionSet solve_gmn_bounded(const Natural& c, const Natural& p,
                                     unsigned n_max) {
  if (c < 1) throw std::invalid_argument("solve_gmn_bounded: c must be >= 1");
  if (n_max < 1 || n_max > kMaxExponent)
    throw std::invalid_argument("solve_gmn_bounded: n_max out of range [1, " +
                                std::to_string(kMaxExponent) + "]");
  if (!is_prime(p))
    throw NotPrimeError("solve_gmn_bounded: p = " + p.str() + " is not prime");
  SolutionSet out{GmnEquation{c, p}, n_max, {}};
  Natural pw = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    pw *= p;
    const Natural value = pw - p + 1;
    if (value % c != 0) continue;
    if (const auto x = is_square(value / c)) {
      if (c * *x * *x + p - 1 != pw)
        throw std::logic_error("solve_gmn_bounded: re-substitution failed");
      out.solutions.push_back(Solution{*x, n});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid scans

/// A representation is nontrivial iff its value c*x^2 lies outside the
/// exceptional value set {1, 25, 121}.
inline bool is_exceptional_value(const Natural& v) {
  return v == 1 || v == 25 || v == 121;
}

struct ScanGrid {
  Natural c_max;
  Natural p_max;
  unsigned n_max = 0;

  friend bool operator==(const ScanGrid&, const ScanGrid&) = default;
};

struct PairRow {
  Natural c;
  Natural p;
  VerdictKind verdict = VerdictKind::InvalidInput;
  std::vector<Solution> solutions;
  unsigned nontrivial_count = 0;

  friend bool operator==(const PairRow&, const PairRow&) = default;
};

struct Mismatch {
  Natural c;
  Natural p;
  std::string reason;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ScanReport {
  ScanGrid grid;
  std::vector<PairRow> per_pair;          // every scanned pair, sorted by (c, p)
  std::vector<PairRow> violations;        // expected empty; hard failure if not
  std::vector<PairRow> nontrivial_hits;   // exactly one nontrivial representation
  std::vector<Mismatch> classifier_mismatches;
  std::vector<PairRow> small_exponent_hits;  // mersenne scan: hits with n <= 2

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

namespace detail {

inline unsigned clamp_threads(unsigned threads, std::uint64_t work_items) {
  if (threads < 1) threads = 1;
  if (work_items < threads) threads = static_cast<unsigned>(work_items);
  return threads == 0 ? 1 : threads;
}

inline void sort_rows(std::vector<PairRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const PairRow& a, const PairRow& b) {
    return a.c != b.c ? a.c < b.c : a.p < b.p;
  });
}

inline std::uint64_t checked_u64(const Natural& v, const char* what,
                                 std::uint64_t cap) {
  if (v < 1 || v > cap)
    throw std::invalid_argument(std::string(what) + " out of range [1, " +
                                std::to_string(cap) + "]");
  return v.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Scans every c in [1, c_max] and prime p <= p_max: classifies the pair,
/// enumerates solutions up to n_max, and cross-checks one against the
/// other. Populates violations (>= 2 nontrivial representations),
/// nontrivial_hits (exactly one) and classifier_mismatches (oracle output
/// contradicting the verdict, including even-c rows that must be empty).
inline ScanReport verify_theorem(const Natural& c_max, const Natural& p_max,
                                 unsigned n_max, unsigned threads = 1) {
  const std::uint64_t c_hi = detail::checked_u64(c_max, "verify_theorem: c_max",
                                                 1'000'000'000ull);
  const std::uint64_t p_hi =
      detail::checked_u64(p_max, "verify_theorem: p_max", 1'000'000ull);
  if (n_max < 1 || n_max > kMaxExponent)
    throw std::invalid_argument("verify_theorem: n_max out of range");

  const std::vector<std::uint32_t> primes =
      sieve_primes(static_cast<std::uint32_t>(p_hi));

  ScanReport report;
  report.grid = ScanGrid{c_max, p_max, n_max};
  if (primes.empty()) return report;

  auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    ScanReport part;
    for (std::uint64_t ci = lo; ci < hi; ++ci) {
      const Natural c(ci);
      for (const std::uint32_t pi : primes) {
        const Natural p(pi);
        const Verdict verdict = classify_pair(c, p);
        const SolutionSet sols = solve_gmn_bounded(c, p, n_max);

        PairRow row{c, p, verdict.kind, sols.solutions, 0};
        for (const Solution& s : sols.solutions)
          if (!is_exceptional_value(c * s.x * s.x)) ++row.nontrivial_count;

        switch (verdict.kind) {
          case VerdictKind::NoSolutionEvenC:
          case VerdictKind::NoSolutionGcd:
          case VerdictKind::NoSolutionPDividesC:
            if (!sols.solutions.empty())
              part.classifier_mismatches.push_back(
                  {c, p,
                   "classifier predicts no solutions, oracle found " +
                       std::to_string(sols.solutions.size())});
            break;
          case VerdictKind::ExceptionalP3:
          case VerdictKind::ExceptionalP5: {
            std::vector<Solution> expected;
            for (const Solution& s : verdict.predicted_solutions)
              if (s.exponent <= n_max) expected.push_back(s);
            if (sols.solutions != expected)
              part.classifier_mismatches.push_back(
                  {c, p, "oracle solutions differ from the predicted exceptional set"});
            break;
          }
          case VerdictKind::AtMostOneGeneric:
            if (row.nontrivial_count >= 2)
              part.classifier_mismatches.push_back(
                  {c, p,
                   "at-most-one bound exceeded: " +
                       std::to_string(row.nontrivial_count) +
                       " nontrivial representations"});
            break;
          case VerdictKind::InvalidInput:
            part.classifier_mismatches.push_back({c, p, "unexpected InvalidInput"});
            break;
        }

        if (row.nontrivial_count >= 2) part.violations.push_back(row);
        else if (row.nontrivial_count == 1) part.nontrivial_hits.push_back(row);
        part.per_pair.push_back(std::move(row));
      }
    }
    return part;
  };

  threads = detail::clamp_threads(threads, c_hi);
  if (threads <= 1) {
    ScanReport part = scan_chunk(1, c_hi + 1);
    report.per_pair = std::move(part.per_pair);
    report.violations = std::move(part.violations);
    report.nontrivial_hits = std::move(part.nontrivial_hits);
    report.classifier_mismatches = std::move(part.classifier_mismatches);
  } else {
    std::vector<std::future<ScanReport>> parts;
    const std::uint64_t step = (c_hi + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = 1 + t * step;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + step, c_hi + 1);
      if (lo > c_hi) break;
      parts.push_back(std::async(std::launch::async, scan_chunk, lo, hi));
    }
    for (auto& f : parts) {
      ScanReport part = f.get();
      auto append = [](auto& dst, auto& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                   std::make_move_iterator(src.end()));
      };
      append(report.per_pair, part.per_pair);
      append(report.violations, part.violations);
      append(report.nontrivial_hits, part.nontrivial_hits);
      append(report.classifier_mismatches, part.classifier_mismatches);
    }
  }

  // chunks already arrive in (c, p) order; sort keeps the contract explicit
  detail::sort_rows(report.per_pair);
  detail::sort_rows(report.violations);
  detail::sort_rows(report.nontrivial_hits);
  std::sort(report.classifier_mismatches.begin(),
            report.classifier_mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) {
              return a.c != b.c ? a.c < b.c : a.p < b.p;
            });
  return report;
}

/// Scans Mersenne numbers 2^n - 1 = c*x^2 for c in [1, c_max], n <= n_max.
/// A hit with n >= 3 and c != 7 (mod 8) is a corollary violation; hits
/// with n <= 2 land in the small_exponent_hits bucket. Existence of a hit
/// for c = 7 (mod 8) is reported, never asserted.
inline ScanReport mersenne_scan(const Natural& c_max, unsigned n_max,
                                unsigned threads = 1) {
  const std::uint64_t c_hi =
      detail::checked_u64(c_max, "mersenne_scan: c_max", 1'000'000'000ull);
  if (n_max < 1 || n_max > kMaxExponent)
    throw std::invalid_argument("mersenne_scan: n_max out of range");

  ScanReport report;
  report.grid = ScanGrid{c_max, 2, n_max};

  auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    ScanReport part;
    for (std::uint64_t ci = lo; ci < hi; ++ci) {
      const Natural c(ci);
      const Verdict verdict = classify_pair(c, 2);
      const SolutionSet sols = solve_gmn_bounded(c, 2, n_max);

      PairRow row{c, 2, verdict.kind, sols.solutions, 0};
      std::vector<Solution> big, small;
      for (const Solution& s : sols.solutions) {
        if (!is_exceptional_value(c * s.x * s.x)) ++row.nontrivial_count;
        (s.exponent >= 3 ? big : small).push_back(s);
      }
      if (!small.empty())
        part.small_exponent_hits.push_back(
            PairRow{c, 2, verdict.kind, small, row.nontrivial_count});
      if (!big.empty() && ci % 8 != 7)
        part.violations.push_back(
            PairRow{c, 2, verdict.kind, big, row.nontrivial_count});
      if (row.nontrivial_count == 1) part.nontrivial_hits.push_back(row);
      part.per_pair.push_back(std::move(row));
    }
    return part;
  };

  threads = detail::clamp_threads(threads, c_hi);
  std::vector<std::future<ScanReport>> parts;
  const std::uint64_t step = (c_hi + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = 1 + t * step;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + step, c_hi + 1);
    if (lo > c_hi) break;
    parts.push_back(std::async(std::launch::async, scan_chunk, lo, hi));
  }
  for (auto& f : parts) {
    ScanReport part = f.get();
    auto append = [](auto& dst, auto& src) {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                 std::make_move_iterator(src.end()));
    };
    append(report.per_pair, part.per_pair);
    append(report.violations, part.violations);
    append(report.nontrivial_hits, part.nontrivial_hits);
    append(report.small_exponent_hits, part.small_exponent_hits);
  }
  detail::sort_rows(report.per_pair);
  detail::sort_rows(report.violations);
  detail::sort_rows(report.nontrivial_hits);
  detail::sort_rows(report.small_exponent_hits);
  return report;
}

}  // namespace gmn
