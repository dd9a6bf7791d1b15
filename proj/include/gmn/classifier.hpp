#pragma once

// Exceptional-set machinery for equations D1*x^2 + D2 = lambda^2 * p^y
// (lambda^2 in {1, 2, 4}) and the descent that classifies, for a pair
// (c, p), how many representations M_{p,n} = c*x^2 can exist.
//
// The exceptional sets:
//   Omega — eight fixed quadruples (lambda^2, D1, D2, p);
//   F     — triples (F_{k-2e}, L_{k+e}, F_k), k >= 2, e = +-1;
//   G     — triples (1, 4p^r - 1, p), p an odd prime, r >= 1;
//   H     — triples (D1, D2, p), mutually coprime, admitting s, r >= 1 with
//           D1*s^2 + D2 = lambda^2*p^r and 3*D1*s^2 - D2 = +-lambda^2.
// The oddness condition on p applies for lambda^2 in {1, 2} and is dropped
// for lambda^2 = 4.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gmn/arith.hpp"
#include "gmn/gmn.hpp"

namespace gmn {

/// Parameters of D1*x^2 + D2 = lambda^2 * p^y.
struct BsQuadruple {
  unsigned lambda_sq = 1;  // 1, 2 or 4
  Natural d1;
  Natural d2;
  Natural p;

  friend bool operator==(const BsQuadruple&, const BsQuadruple&) = default;
};

/// Throws std::invalid_argument unless q satisfies all invariants:
/// lambda^2 in {1,2,4}, D1, D2 >= 1 coprime, p prime, gcd(D1*D2, p) = 1.
inline void validate(const BsQuadruple& q) {
  using boost::multiprecision::gcd;
  if (q.lambda_sq != 1 && q.lambda_sq != 2 && q.lambda_sq != 4)
    throw std::invalid_argument("BsQuadruple: lambda^2 must be 1, 2 or 4");
  if (q.d1 < 1 || q.d2 < 1)
    throw std::invalid_argument("BsQuadruple: D1 and D2 must be positive");
  if (gcd(q.d1, q.d2) != 1)
    throw std::invalid_argument("BsQuadruple: D1 and D2 must be coprime");
  if (!is_prime(q.p))
    throw std::invalid_argument("BsQuadruple: p = " + q.p.str() +
                                " is not prime");
  if (gcd(q.d1 * q.d2, q.p) != 1)
    throw std::invalid_argument("BsQuadruple: p must not divide D1*D2");
}

// ---------------------------------------------------------------------------
// Omega

struct OmegaEntry {
  unsigned lambda_sq;
  unsigned d1, d2, p;
};

/// The eight exceptional quadruples, including the corrected (2, 7, 25, 2).
inline constexpr std::array<OmegaEntry, 8> kOmegaTable = {{
    {4, 13, 3, 2},
    {2, 7, 11, 3},
    {1, 2, 1, 3},
    {4, 7, 1, 2},
    {2, 1, 1, 5},
    {2, 1, 1, 13},
    {4, 1, 3, 7},
    {4, 7, 25, 2},
}};

inline bool check_omega(const BsQuadruple& q) {
  for (const OmegaEntry& e : kOmegaTable)
    if (q.lambda_sq == e.lambda_sq && q.d1 == e.d1 && q.d2 == e.d2 &&
        q.p == e.p)
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// F

struct FWitness {
  unsigned k = 0;
  int eps = 0;  // +1 or -1

  friend bool operator==(const FWitness&, const FWitness&) = default;
};

/// Witness (k, eps) with d1 = F_{k-2*eps}, d2 = L_{k+eps}, p = F_k, if one
/// exists. eps = +1 is examined first. p is assumed prime by the caller
/// (any Fibonacci p works in practice). A returned witness always honors
/// the identity 4*p - d1 == d2.
inline std::optional<FWitness> check_f(const Natural& d1, const Natural& d2,
                                       const Natural& p) {
  const auto k = fibonacci_index(p);
  if (!k) return std::nullopt;
  for (int eps : {+1, -1}) {
    const long long lo = static_cast<long long>(*k) - 2ll * eps;
    if (lo < 0) continue;
    if (d1 == fibonacci(static_cast<unsigned>(lo)) &&
        d2 == lucas(static_cast<unsigned>(static_cast<long long>(*k) + eps))) {
      if (4 * p - d1 != d2)
        throw std::logic_error("check_f: witness violates 4F_k - F_{k-2e} = L_{k+e}");
      return FWitness{*k, eps};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// G

/// r in [1, r_max] with d1 == 1 and d2 == 4*p^r - 1, for odd prime p.
inline std::optional<unsigned> check_g(const Natural& d1, const Natural& d2,
                                       const Natural& p, unsigned r_max) {
  if (d1 != 1 || p % 2 == 0) return std::nullopt;
  Natural pw = 1;
  for (unsigned r = 1; r <= r_max; ++r) {
    pw *= p;
    const Natural g = 4 * pw - 1;
    if (g == d2) return r;
    if (g > d2) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// H

struct HWitness {
  Natural s;
  unsigned r = 0;

  friend bool operator==(const HWitness&, const HWitness&) = default;
};

/// Lexicographically first (s, r) with s <= s_max, r <= r_max satisfying
/// both D1*s^2 + D2 = lambda^2*p^r and 3*D1*s^2 - D2 = +-lambda^2, absent
/// if none. Membership also demands mutually coprime positive D1, D2, p
/// and (for lambda^2 in {1,2}) odd p; primality of p is the caller's
/// precondition. Any solution fixes 3*D1*s^2 = D2 -+ lambda^2, so only two
/// candidate s exist and the bounded search is solved directly.
inline std::optional<HWitness> check_h_bounded(const BsQuadruple& q,
                                               const Natural& s_max,
                                               unsigned r_max) {
  using boost::multiprecision::gcd;
  if (q.d1 < 1 || q.d2 < 1 || q.p < 2) return std::nullopt;
  if (q.lambda_sq != 4 && q.p % 2 == 0) return std::nullopt;
  if (gcd(q.d1, q.d2) != 1 || gcd(q.d1, q.p) != 1 || gcd(q.d2, q.p) != 1)
    return std::nullopt;

  std::optional<HWitness> best;
  for (int sign : {-1, +1}) {
    const Natural target = q.d2 + sign * Natural(q.lambda_sq);
    if (target <= 0) continue;
    if (target % (3 * q.d1) != 0) continue;
    const auto s = is_square(target / (3 * q.d1));
    if (!s || *s < 1 || *s > s_max) continue;
    Natural rest = q.d1 * *s * *s + q.d2;
    if (rest % q.lambda_sq != 0) continue;
    rest /= q.lambda_sq;
    unsigned r = 0;
    while (rest > 1 && rest % q.p == 0) {
      rest /= q.p;
      ++r;
    }
    if (rest != 1 || r < 1 || r > r_max) continue;
    if (!best || *s < best->s) best = HWitness{*s, r};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Verdicts

/// One solution (x, exponent) of an equation c*x^2 = M_{p,n} or
/// D1*x^2 + D2 = lambda^2*p^y.
struct Solution {
  Natural x;
  unsigned exponent = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class VerdictKind {
  InvalidInput,
  NoSolutionEvenC,
  NoSolutionGcd,
  NoSolutionPDividesC,
  ExceptionalP3,
  ExceptionalP5,
  AtMostOneGeneric,
};

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::InvalidInput: return "InvalidInput";
    case VerdictKind::NoSolutionEvenC: return "NoSolutionEvenC";
    case VerdictKind::NoSolutionGcd: return "NoSolutionGcd";
    case VerdictKind::NoSolutionPDividesC: return "NoSolutionPDividesC";
    case VerdictKind::ExceptionalP3: return "ExceptionalP3";
    case VerdictKind::ExceptionalP5: return "ExceptionalP5";
    case VerdictKind::AtMostOneGeneric: return "AtMostOneGeneric";
  }
  return "?";
}

inline std::optional<VerdictKind> verdict_kind_from_string(std::string_view s) {
  for (VerdictKind k :
       {VerdictKind::InvalidInput, VerdictKind::NoSolutionEvenC,
        VerdictKind::NoSolutionGcd, VerdictKind::NoSolutionPDividesC,
        VerdictKind::ExceptionalP3, VerdictKind::ExceptionalP5,
        VerdictKind::AtMostOneGeneric})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Membership evidence gathered while classifying (c, p-1, p).
struct MembershipChecks {
  bool omega_member = false;
  std::optional<FWitness> f_witness;
  std::optional<unsigned> g_exponent;
  std::optional<HWitness> h_witness;

  friend bool operator==(const MembershipChecks&,
                         const MembershipChecks&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::InvalidInput;
  std::optional<MembershipChecks> details;
  std::vector<Solution> predicted_solutions;
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decides how many representations M_{p,n} = c*x^2 can exist for the
/// pair (c, p), in fixed order:
///   (a) 2 | c          -> NoSolutionEvenC   (every M_{p,n} is odd)
///   (b) p | c          -> NoSolutionPDividesC
///   (c) gcd(c, p-1) > 1 -> NoSolutionGcd
///   (d) (1,3) / (1,5)  -> ExceptionalP3 / ExceptionalP5, the closed-form
///       H cases, with their full predicted solution sets
///   (e) otherwise AtMostOneGeneric; details record the Omega (at
///       lambda^2 = 1), F, G and bounded-H membership tests of (c, p-1, p).
/// Invalid inputs (c < 1 or p not prime) yield kind InvalidInput.
inline Verdict classify_pair(const Natural& c, const Natural& p,
                             unsigned r_max = 64,
                             const Natural& s_max = Natural(1'000'000)) {
  using boost::multiprecision::gcd;
  if (c < 1 || !is_prime(p)) return Verdict{VerdictKind::InvalidInput, {}, {}, {}};
  if (c % 2 == 0) return Verdict{VerdictKind::NoSolutionEvenC, {}, {}, {}};
  if (c % p == 0) return Verdict{VerdictKind::NoSolutionPDividesC, {}, {}, {}};
  if (gcd(c, p - 1) != 1) return Verdict{VerdictKind::NoSolutionGcd, {}, {}, {}};
  if (c == 1 && p == 3) {
    MembershipChecks mc;
    mc.h_witness = HWitness{1, 1};  // 1*1^2 + 2 = 3, 3*1^2 - 2 = 1
    return Verdict{VerdictKind::ExceptionalP3, mc,
                   {Solution{1, 1}, Solution{5, 3}}, {}};
  }
  if (c == 1 && p == 5) {
    MembershipChecks mc;
    mc.h_witness = HWitness{1, 1};  // 1*1^2 + 4 = 5, 3*1^2 - 4 = -1
    return Verdict{VerdictKind::ExceptionalP5, mc,
                   {Solution{1, 1}, Solution{11, 3}}, {}};
  }
  MembershipChecks mc;
  mc.omega_member = check_omega(BsQuadruple{1, c, p - 1, p});
  mc.f_witness = check_f(c, p - 1, p);
  mc.g_exponent = check_g(c, p - 1, p, r_max);
  mc.h_witness = check_h_bounded(BsQuadruple{1, c, p - 1, p}, s_max, r_max);
  Verdict v{VerdictKind::AtMostOneGeneric, mc, {}, {}};
  if (c == 1)
    v.note =
        "n = 1 gives the representation 1 = 1*1^2; the at-most-one bound "
        "makes it the only one for this pair";
  return v;
}

}  // namespace gmn
