// Command-line front end: classification, bounded solving and grid
// verification with text/json/csv reports.
//
// Exit status: 0 on success, 1 when a report carries violations or
// classifier mismatches, 2 on usage or precondition errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gmn/report_io.hpp"

namespace {

using gmn::Json;
using gmn::Natural;

struct CommonConfig {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = gmn::kDefaultSeed;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", cfg.output,
                  "Write the report to this file instead of stdout");
  cmd->add_option("--seed", cfg.seed,
                  "Seed for randomized probable-prime rounds (inputs above "
                  "the deterministic bound)");
  cmd->add_flag("--timing", cfg.timing,
                "Fill elapsed_ms in json reports (breaks byte-for-byte "
                "reproducibility)");
}

Natural nat_arg(const std::string& s, const char* what) {
  try {
    Natural v(s);
    if (v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a nonnegative integer, got '" + s +
                                "'");
  }
}

void write_out(const CommonConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.output);
  f << payload;
}

unsigned scan_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("GMN_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1 && cap < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

class Timer {
 public:
  std::uint64_t elapsed_ms() const {
    using namespace std::chrono;
    return static_cast<std::uint64_t>(
        duration_cast<milliseconds>(steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<std::uint64_t> json_elapsed(const CommonConfig& cfg, const Timer& t) {
  if (cfg.timing) return t.elapsed_ms();
  return std::nullopt;
}

std::string human_solutions(const Natural& c, const std::vector<gmn::Solution>& sols) {
  return sols.empty() ? std::string("(none)") : gmn::solutions_csv_field(c, sols);
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOpts {
  CommonConfig common;
  std::string c, p;
  unsigned r_max = 64;
  std::string s_max = "1000000";
};

int run_classify(const ClassifyOpts& o) {
  const Natural c = nat_arg(o.c, "--c");
  const Natural p = nat_arg(o.p, "--p");
  const Natural s_max = nat_arg(o.s_max, "--s-max");
  const Timer timer;
  const gmn::Verdict v = gmn::classify_pair(c, p, o.r_max, s_max);

  if (o.common.format == "json") {
    Json bounds;
    bounds["r_max"] = std::to_string(o.r_max);
    bounds["s_max"] = gmn::to_dec(s_max);
    bounds["seed"] = std::to_string(o.common.seed);
    Json env = gmn::make_envelope(
        "classify", std::move(bounds),
        Json::array({gmn::json_of_verdict(c, p, v)}), Json::array(),
        Json::array(), Json::array(), json_elapsed(o.common, timer));
    write_out(o.common, gmn::dump_report(env));
  } else if (o.common.format == "csv") {
    write_out(o.common, gmn::csv_of_verdict(c, p, v));
  } else {
    std::string out = "classify c=" + gmn::to_dec(c) + " p=" + gmn::to_dec(p) + "\n";
    out += "verdict: " + std::string(gmn::to_string(v.kind)) + "\n";
    if (!v.predicted_solutions.empty())
      out += "predicted solutions: " + human_solutions(c, v.predicted_solutions) + "\n";
    if (v.details) {
      out += "membership evidence for (c, p-1, p):";
      out += std::string(" omega=") + (v.details->omega_member ? "yes" : "no");
      out += " f=";
      out += v.details->f_witness
                 ? "(k=" + std::to_string(v.details->f_witness->k) +
                       ", eps=" + std::to_string(v.details->f_witness->eps) + ")"
                 : std::string("none");
      out += " g=";
      out += v.details->g_exponent ? "r=" + std::to_string(*v.details->g_exponent)
                                   : std::string("none");
      out += " h=";
      out += v.details->h_witness
                 ? "(s=" + gmn::to_dec(v.details->h_witness->s) +
                       ", r=" + std::to_string(v.details->h_witness->r) + ")"
                 : std::string("none");
      out += "\n";
    }
    if (!v.note.empty()) out += "note: " + v.note + "\n";
    out += "elapsed: " + std::to_string(timer.elapsed_ms()) + " ms\n";
    write_out(o.common, out);
  }
  return v.kind == gmn::VerdictKind::InvalidInput ? 2 : 0;
}

// ---------------------------------------------------------------------------
// solve-bs / solve-gmn

struct SolveBsOpts {
  CommonConfig common;
  unsigned lambda2 = 1;
  std::string d1, d2, p;
  unsigned y_max = 40;
};

int emit_solution_set(const CommonConfig& cfg, const std::string& command,
                      Json bounds, const gmn::SolutionSet& sols,
                      const std::function<Natural(const gmn::Solution&)>& value_of,
                      const Timer& timer) {
  if (cfg.format == "json") {
    bounds["seed"] = std::to_string(cfg.seed);
    Json env = gmn::make_envelope(
        command, std::move(bounds),
        Json::array({gmn::json_of_solution_set(sols)}), Json::array(),
        Json::array(), Json::array(), json_elapsed(cfg, timer));
    write_out(cfg, gmn::dump_report(env));
  } else if (cfg.format == "csv") {
    write_out(cfg, gmn::csv_of_solution_set(sols));
  } else {
    std::string out = command + ": " + std::to_string(sols.solutions.size()) +
                      " solution(s) with exponent <= " +
                      std::to_string(sols.exponent_max) + "\n";
    for (const gmn::Solution& s : sols.solutions)
      out += "  x=" + gmn::to_dec(s.x) + " exponent=" +
             std::to_string(s.exponent) + " value=" +
             gmn::to_dec(value_of(s)) + "\n";
    out += "elapsed: " + std::to_string(timer.elapsed_ms()) + " ms\n";
    write_out(cfg, out);
  }
  return 0;
}

int run_solve_bs(const SolveBsOpts& o) {
  const gmn::BsQuadruple q{o.lambda2, nat_arg(o.d1, "--d1"),
                           nat_arg(o.d2, "--d2"), nat_arg(o.p, "--p")};
  const Timer timer;
  const gmn::SolutionSet sols = gmn::solve_bs_bounded(q, o.y_max);
  Json bounds;
  bounds["y_max"] = std::to_string(o.y_max);
  return emit_solution_set(
      o.common, "solve-bs", std::move(bounds), sols,
      [&q](const gmn::Solution& s) { return q.d1 * s.x * s.x + q.d2; }, timer);
}

struct SolveGmnOpts {
  CommonConfig common;
  std::string c, p;
  unsigned n_max = 100;
};

int run_solve_gmn(const SolveGmnOpts& o) {
  const Natural c = nat_arg(o.c, "--c");
  const Natural p = nat_arg(o.p, "--p");
  const Timer timer;
  const gmn::SolutionSet sols = gmn::solve_gmn_bounded(c, p, o.n_max);
  Json bounds;
  bounds["n_max"] = std::to_string(o.n_max);
  return emit_solution_set(
      o.common, "solve-gmn", std::move(bounds), sols,
      [&c](const gmn::Solution& s) { return c * s.x * s.x; }, timer);
}

// ---------------------------------------------------------------------------
// verify-theorem / mersenne-scan

struct VerifyOpts {
  CommonConfig common;
  std::string c_max, p_max;
  unsigned n_max = 100;
};

int scan_exit(const CommonConfig& cfg, const gmn::ScanReport& r) {
  if (r.violations.empty() && r.classifier_mismatches.empty()) return 0;
  std::cerr << "verification failure: " << r.violations.size()
            << " violation(s), " << r.classifier_mismatches.size()
            << " classifier mismatch(es)\n";
  (void)cfg;
  return 1;
}

int run_verify(const VerifyOpts& o) {
  const Natural c_max = nat_arg(o.c_max, "--c-max");
  const Natural p_max = nat_arg(o.p_max, "--p-max");
  const Timer timer;
  const gmn::ScanReport r =
      gmn::verify_theorem(c_max, p_max, o.n_max, scan_threads());

  if (o.common.format == "json") {
    Json env = gmn::envelope_of_scan("verify-theorem", r,
                                     json_elapsed(o.common, timer));
    env["bounds"]["seed"] = std::to_string(o.common.seed);
    write_out(o.common, gmn::dump_report(env));
  } else if (o.common.format == "csv") {
    write_out(o.common, gmn::csv_of_scan(r));
  } else {
    std::string out = "verify-theorem: c in [1, " + gmn::to_dec(c_max) +
                      "], primes p <= " + gmn::to_dec(p_max) + ", n <= " +
                      std::to_string(o.n_max) + "\n";
    out += "pairs scanned: " + std::to_string(r.per_pair.size()) + "\n";
    out += "violations (>= 2 nontrivial representations): " +
           std::to_string(r.violations.size()) + "\n";
    for (const auto& row : r.violations)
      out += "  c=" + gmn::to_dec(row.c) + " p=" + gmn::to_dec(row.p) + ": " +
             human_solutions(row.c, row.solutions) + "\n";
    out += "classifier mismatches: " +
           std::to_string(r.classifier_mismatches.size()) + "\n";
    for (const auto& m : r.classifier_mismatches)
      out += "  c=" + gmn::to_dec(m.c) + " p=" + gmn::to_dec(m.p) + ": " +
             m.reason + "\n";
    out += "nontrivial hits (exactly one representation): " +
           std::to_string(r.nontrivial_hits.size()) + "\n";
    for (const auto& row : r.nontrivial_hits)
      out += "  c=" + gmn::to_dec(row.c) + " p=" + gmn::to_dec(row.p) + ": " +
             human_solutions(row.c, row.solutions) + "\n";
    out += "elapsed: " + std::to_string(timer.elapsed_ms()) + " ms\n";
    write_out(o.common, out);
  }
  return scan_exit(o.common, r);
}

struct MersenneOpts {
  CommonConfig common;
  std::string c_max;
  unsigned n_max = 100;
};

int run_mersenne(const MersenneOpts& o) {
  const Natural c_max = nat_arg(o.c_max, "--c-max");
  const Timer timer;
  const gmn::ScanReport r = gmn::mersenne_scan(c_max, o.n_max, scan_threads());

  if (o.common.format == "json") {
    Json env = gmn::envelope_of_scan("mersenne-scan", r,
                                     json_elapsed(o.common, timer));
    env["bounds"]["seed"] = std::to_string(o.common.seed);
    write_out(o.common, gmn::dump_report(env));
  } else if (o.common.format == "csv") {
    write_out(o.common, gmn::csv_of_scan(r));
  } else {
    std::string out = "mersenne-scan: 2^n - 1 = c*x^2 for c in [1, " +
                      gmn::to_dec(c_max) + "], n <= " + std::to_string(o.n_max) +
                      "\n";
    std::array<unsigned, 8> residue_hits{};
    std::vector<const gmn::PairRow*> multi;
    for (const auto& row : r.per_pair) {
      unsigned big = 0;
      for (const auto& s : row.solutions)
        if (s.exponent >= 3) ++big;
      if (big > 0) residue_hits[(row.c % 8).convert_to<unsigned>()] += big;
      if (big >= 2) multi.push_back(&row);
    }
    out += "hits with n >= 3 by residue c mod 8:";
    for (unsigned rcls = 0; rcls < 8; ++rcls)
      if (residue_hits[rcls] > 0)
        out += " " + std::to_string(rcls) + ":" + std::to_string(residue_hits[rcls]);
    out += "\n";
    out += "corollary violations (hit with n >= 3 and c != 7 mod 8): " +
           std::to_string(r.violations.size()) + "\n";
    for (const auto& row : r.violations)
      out += "  c=" + gmn::to_dec(row.c) + ": " +
             human_solutions(row.c, row.solutions) + "\n";
    out += "hits with n <= 2 (reported separately): " +
           std::to_string(r.small_exponent_hits.size()) + "\n";
    for (const auto& row : r.small_exponent_hits)
      out += "  c=" + gmn::to_dec(row.c) + ": " +
             human_solutions(row.c, row.solutions) + "\n";
    out += "pairs with >= 2 hits at n >= 3: " + std::to_string(multi.size()) + "\n";
    for (const auto* row : multi)
      out += "  c=" + gmn::to_dec(row->c) + ": " +
             human_solutions(row->c, row->solutions) + "\n";
    out += "elapsed: " + std::to_string(timer.elapsed_ms()) + " ms\n";
    write_out(o.common, out);
  }
  return scan_exit(o.common, r);
}

// ---------------------------------------------------------------------------
// self-test

struct SelfTestOpts {
  CommonConfig common;
};

struct GoldenCheck {
  std::string name;
  std::function<bool()> run;
};

int run_self_test(const SelfTestOpts& o) {
  using namespace gmn;
  const Timer timer;
  std::vector<Solution> sols;

  auto solutions_equal = [](const SolutionSet& got,
                            std::vector<Solution> want) {
    return got.solutions == want;
  };

  const std::vector<GoldenCheck> checks = {
      {"isqrt: 0 -> 0, 25 -> 5, 26 -> 5",
       [] { return isqrt(0) == 0 && isqrt(25) == 5 && isqrt(26) == 5; }},
      {"is_square: 121 -> 11, 26 -> none",
       [] {
         const auto r = is_square(121);
         return r && *r == 11 && !is_square(26);
       }},
      {"fibonacci/lucas seeds: F0=0 F1=1 L0=2 L1=1, F10=55",
       [] {
         return fibonacci(0) == 0 && fibonacci(1) == 1 && lucas(0) == 2 &&
                lucas(1) == 1 && fibonacci(10) == 55;
       }},
      {"identity 4F_k - F_{k-2e} = L_{k+e} for k in [2, 200]",
       [] {
         for (unsigned k = 2; k <= 200; ++k)
           for (int eps : {+1, -1})
             if (!lucas_identity_holds(k, eps)) return false;
         return true;
       }},
      {"squarefree decompositions: 121 -> (1,11), 63 -> (7,3), 1 -> (1,1)",
       [&o] {
         FactorBudget b;
         b.seed = o.common.seed;
         return squarefree_decompose(121, b) == SquareDecomposition{1, 11} &&
                squarefree_decompose(63, b) == SquareDecomposition{7, 3} &&
                squarefree_decompose(1, b) == SquareDecomposition{1, 1};
       }},
      {"omega table: 8 entries, (4,13,3,2) and (4,7,25,2) member, (1,1,2,3) not",
       [] {
         return kOmegaTable.size() == 8 &&
                check_omega(BsQuadruple{4, 13, 3, 2}) &&
                check_omega(BsQuadruple{4, 7, 25, 2}) &&
                !check_omega(BsQuadruple{1, 1, 2, 3});
       }},
      {"check_f witnesses: (2,18,5), (13,7,5), (1,11,3)",
       [] {
         const auto a = check_f(2, 18, 5);
         const auto b = check_f(13, 7, 5);
         const auto c = check_f(1, 11, 3);
         return a == FWitness{5, +1} && b == FWitness{5, -1} &&
                c == FWitness{4, +1};
       }},
      {"check_g: (1, 11, 3) -> r=1, (1, 2, 3) -> none",
       [] {
         return check_g(1, 11, 3, 10) == 1u && !check_g(1, 2, 3, 10);
       }},
      {"check_h closed forms: (1,1,2,3) -> (1,1), (1,1,4,5) -> (1,1)",
       [] {
         return check_h_bounded(BsQuadruple{1, 1, 2, 3}, 50, 50) ==
                    HWitness{1, 1} &&
                check_h_bounded(BsQuadruple{1, 1, 4, 5}, 50, 50) ==
                    HWitness{1, 1};
       }},
      {"values: M_{3,3}=25, M_{5,3}=121, M_{2,5}=31, M_{7,1}=1",
       [] {
         return gmn_value(3, 3).value == 25 && gmn_value(5, 3).value == 121 &&
                gmn_value(2, 5).value == 31 && gmn_value(7, 1).value == 1;
       }},
      {"representations: 25 = 1*5^2, 121 = 1*11^2, 31 not 3*x^2",
       [] {
         const auto a = represent_as(gmn_value(3, 3), 1);
         const auto b = represent_as(gmn_value(5, 3), 1);
         return a && *a == 5 && b && *b == 11 &&
                !represent_as(gmn_value(2, 5), 3);
       }},
      {"solve-bs corrected quadruple (2,7,25,2): {(1,3),(17,9)}",
       [&] {
         return solutions_equal(solve_bs_bounded(BsQuadruple{4, 7, 25, 2}, 40),
                                {Solution{1, 3}, Solution{17, 9}});
       }},
      {"solve-bs x^2+2=3^y: {(1,1),(5,3)}",
       [&] {
         return solutions_equal(solve_bs_bounded(BsQuadruple{1, 1, 2, 3}, 60),
                                {Solution{1, 1}, Solution{5, 3}});
       }},
      {"solve-bs x^2+4=5^y: {(1,1),(11,3)}",
       [&] {
         return solutions_equal(solve_bs_bounded(BsQuadruple{1, 1, 4, 5}, 60),
                                {Solution{1, 1}, Solution{11, 3}});
       }},
      {"solve-gmn exceptional pairs: (1,3) and (1,5)",
       [&] {
         return solutions_equal(solve_gmn_bounded(1, 3, 100),
                                {Solution{1, 1}, Solution{5, 3}}) &&
                solutions_equal(solve_gmn_bounded(1, 5, 100),
                                {Solution{1, 1}, Solution{11, 3}});
       }},
      {"classify exceptional pairs: (1,3) and (1,5) with predicted sets",
       [] {
         const Verdict a = classify_pair(1, 3);
         const Verdict b = classify_pair(1, 5);
         return a.kind == VerdictKind::ExceptionalP3 &&
                a.predicted_solutions ==
                    std::vector<Solution>{Solution{1, 1}, Solution{5, 3}} &&
                b.kind == VerdictKind::ExceptionalP5 &&
                b.predicted_solutions ==
                    std::vector<Solution>{Solution{1, 1}, Solution{11, 3}};
       }},
      {"classify no-solution reasons: (6,7) even, (3,7) gcd, (9,3) p | c",
       [] {
         return classify_pair(6, 7).kind == VerdictKind::NoSolutionEvenC &&
                classify_pair(3, 7).kind == VerdictKind::NoSolutionGcd &&
                classify_pair(9, 3).kind == VerdictKind::NoSolutionPDividesC;
       }},
      {"repeated representation pair (7,2): 7 = 7*1^2 and 63 = 7*3^2",
       [&] {
         return solutions_equal(solve_gmn_bounded(7, 2, 100),
                                {Solution{1, 3}, Solution{3, 6}});
       }},
  };

  unsigned failed = 0;
  Json results = Json::array();
  std::string text;
  for (const GoldenCheck& check : checks) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failed;
    results.push_back({{"name", check.name}, {"pass", ok}});
    text += std::string(ok ? "PASS  " : "FAIL  ") + check.name + "\n";
  }
  text += std::to_string(checks.size() - failed) + "/" +
          std::to_string(checks.size()) + " golden checks passed, " +
          std::to_string(timer.elapsed_ms()) + " ms\n";

  if (o.common.format == "json") {
    Json bounds;
    bounds["seed"] = std::to_string(o.common.seed);
    Json env = gmn::make_envelope("self-test", std::move(bounds),
                                  std::move(results), Json::array(),
                                  Json::array(), Json::array(),
                                  json_elapsed(o.common, timer));
    write_out(o.common, gmn::dump_report(env));
  } else if (o.common.format == "csv") {
    std::string csv = "name,pass\n";
    for (const auto& r : results)
      csv += gmn::detail::csv_escape(r.at("name").get<std::string>()) + "," +
             (r.at("pass").get<bool>() ? "true" : "false") + "\n";
    write_out(o.common, csv);
  } else {
    write_out(o.common, text);
  }
  if (failed > 0) std::cerr << failed << " golden check(s) failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gmn — generalized Mersenne numbers M_{p,n} = p^n - p + 1 of the form "
      "c*x^2: classification, bounded solving, and exhaustive desk-scale "
      "verification"};
  app.require_subcommand(1);

  ClassifyOpts classify;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Classify a pair (c, p): how many representations "
                  "M_{p,n} = c*x^2 can exist");
  classify_cmd->add_option("--c", classify.c, "Coefficient c >= 1")->required();
  classify_cmd->add_option("--p", classify.p, "Prime p")->required();
  classify_cmd->add_option("--r-max", classify.r_max, "Exponent bound for G/H checks")
      ->capture_default_str();
  classify_cmd->add_option("--s-max", classify.s_max, "Witness bound for the H check")
      ->capture_default_str();
  add_common(classify_cmd, classify.common);

  SolveBsOpts solve_bs;
  CLI::App* solve_bs_cmd = app.add_subcommand(
      "solve-bs", "Enumerate solutions of D1*x^2 + D2 = lambda^2 * p^y, y <= y-max");
  solve_bs_cmd->add_option("--lambda2", solve_bs.lambda2, "lambda^2: 1, 2 or 4")
      ->check(CLI::IsMember({1u, 2u, 4u}))
      ->capture_default_str();
  solve_bs_cmd->add_option("--d1", solve_bs.d1, "D1 >= 1")->required();
  solve_bs_cmd->add_option("--d2", solve_bs.d2, "D2 >= 1")->required();
  solve_bs_cmd->add_option("--p", solve_bs.p, "Prime p")->required();
  solve_bs_cmd->add_option("--y-max", solve_bs.y_max, "Exponent bound")
      ->capture_default_str();
  add_common(solve_bs_cmd, solve_bs.common);

  SolveGmnOpts solve_gmn;
  CLI::App* solve_gmn_cmd = app.add_subcommand(
      "solve-gmn", "Enumerate representations M_{p,n} = c*x^2, n <= n-max");
  solve_gmn_cmd->add_option("--c", solve_gmn.c, "Coefficient c >= 1")->required();
  solve_gmn_cmd->add_option("--p", solve_gmn.p, "Prime p")->required();
  solve_gmn_cmd->add_option("--n-max", solve_gmn.n_max, "Exponent bound")
      ->capture_default_str();
  add_common(solve_gmn_cmd, solve_gmn.common);

  VerifyOpts verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-theorem",
      "Scan every c <= c-max and prime p <= p-max; cross-check classifier "
      "verdicts against enumeration up to n-max");
  verify_cmd->add_option("--c-max", verify.c_max, "Coefficient range bound")->required();
  verify_cmd->add_option("--p-max", verify.p_max, "Prime range bound")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Exponent bound")
      ->capture_default_str();
  add_common(verify_cmd, verify.common);

  MersenneOpts mersenne;
  CLI::App* mersenne_cmd = app.add_subcommand(
      "mersenne-scan", "Scan Mersenne numbers 2^n - 1 = c*x^2 for c <= c-max");
  mersenne_cmd->add_option("--c-max", mersenne.c_max, "Coefficient range bound")->required();
  mersenne_cmd->add_option("--n-max", mersenne.n_max, "Exponent bound")
      ->capture_default_str();
  add_common(mersenne_cmd, mersenne.common);

  SelfTestOpts self_test;
  CLI::App* self_test_cmd = app.add_subcommand(
      "self-test", "Run the embedded golden suite and exit accordingly");
  add_common(self_test_cmd, self_test.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify);
    if (solve_bs_cmd->parsed()) return run_solve_bs(solve_bs);
    if (solve_gmn_cmd->parsed()) return run_solve_gmn(solve_gmn);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (mersenne_cmd->parsed()) return run_mersenne(mersenne);
    if (self_test_cmd->parsed()) return run_self_test(self_test);
  } catch (const gmn::IncompleteFactorization& e) {
    std::cerr << "warning: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
