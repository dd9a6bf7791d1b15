#pragma once

// Machine-readable report serialization (JSON and CSV) with lossless
// parsers for the emitting record types. All Natural-valued fields are
// serialized as decimal strings so big values survive any JSON consumer;
// small counters stay plain numbers. Emission is deterministic: ordered
// keys, fixed formatting, no timestamps unless explicitly requested.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmn/classifier.hpp"
#include "gmn/oracle.hpp"

namespace gmn {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON building blocks

inline std::string to_dec(const Natural& v) { return v.str(); }

inline Natural natural_from_json(const Json& j) {
  return Natural(j.get<std::string>());
}

inline Json json_of_solutions(const std::vector<Solution>& sols) {
  Json arr = Json::array();
  for (const Solution& s : sols)
    arr.push_back({to_dec(s.x), std::to_string(s.exponent)});
  return arr;
}

inline std::vector<Solution> solutions_from_json(const Json& arr) {
  std::vector<Solution> out;
  for (const auto& e : arr)
    out.push_back(Solution{Natural(e.at(0).get<std::string>()),
                           static_cast<unsigned>(std::stoul(e.at(1).get<std::string>()))});
  return out;
}

inline Json json_of_verdict(const Natural& c, const Natural& p, const Verdict& v) {
  Json j;
  j["c"] = to_dec(c);
  j["p"] = to_dec(p);
  j["verdict"] = std::string(to_string(v.kind));
  if (v.details) {
    Json d;
    d["omega_member"] = v.details->omega_member;
    if (v.details->f_witness)
      d["f_witness"] = {{"k", v.details->f_witness->k},
                        {"eps", v.details->f_witness->eps}};
    else
      d["f_witness"] = nullptr;
    if (v.details->g_exponent)
      d["g_exponent"] = *v.details->g_exponent;
    else
      d["g_exponent"] = nullptr;
    if (v.details->h_witness)
      d["h_witness"] = {{"s", to_dec(v.details->h_witness->s)},
                        {"r", v.details->h_witness->r}};
    else
      d["h_witness"] = nullptr;
    j["details"] = d;
  } else {
    j["details"] = nullptr;
  }
  j["predicted_solutions"] = json_of_solutions(v.predicted_solutions);
  j["note"] = v.note;
  return j;
}

/// A classified pair, the record behind the `classify` command.
struct ClassifiedPair {
  Natural c;
  Natural p;
  Verdict verdict;

  friend bool operator==(const ClassifiedPair&, const ClassifiedPair&) = default;
};

inline ClassifiedPair classified_pair_from_json(const Json& j) {
  ClassifiedPair out;
  out.c = natural_from_json(j.at("c"));
  out.p = natural_from_json(j.at("p"));
  const auto kind = verdict_kind_from_string(j.at("verdict").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown verdict kind in report");
  out.verdict.kind = *kind;
  if (!j.at("details").is_null()) {
    MembershipChecks mc;
    const Json& d = j.at("details");
    mc.omega_member = d.at("omega_member").get<bool>();
    if (!d.at("f_witness").is_null())
      mc.f_witness = FWitness{d.at("f_witness").at("k").get<unsigned>(),
                              d.at("f_witness").at("eps").get<int>()};
    if (!d.at("g_exponent").is_null())
      mc.g_exponent = d.at("g_exponent").get<unsigned>();
    if (!d.at("h_witness").is_null())
      mc.h_witness = HWitness{natural_from_json(d.at("h_witness").at("s")),
                              d.at("h_witness").at("r").get<unsigned>()};
    out.verdict.details = mc;
  }
  out.verdict.predicted_solutions = solutions_from_json(j.at("predicted_solutions"));
  out.verdict.note = j.at("note").get<std::string>();
  return out;
}

inline Json json_of_equation(const Equation& eq) {
  Json j;
  if (const auto* q = std::get_if<BsQuadruple>(&eq)) {
    j["type"] = "bs";
    j["lambda2"] = q->lambda_sq;
    j["d1"] = to_dec(q->d1);
    j["d2"] = to_dec(q->d2);
    j["p"] = to_dec(q->p);
  } else {
    const auto& g = std::get<GmnEquation>(eq);
    j["type"] = "gmn";
    j["c"] = to_dec(g.c);
    j["p"] = to_dec(g.p);
  }
  return j;
}

inline Equation equation_from_json(const Json& j) {
  if (j.at("type").get<std::string>() == "bs")
    return BsQuadruple{j.at("lambda2").get<unsigned>(),
                       natural_from_json(j.at("d1")),
                       natural_from_json(j.at("d2")),
                       natural_from_json(j.at("p"))};
  return GmnEquation{natural_from_json(j.at("c")), natural_from_json(j.at("p"))};
}

inline Json json_of_solution_set(const SolutionSet& s) {
  Json j;
  j["equation"] = json_of_equation(s.equation);
  j["exponent_max"] = s.exponent_max;
  j["solutions"] = json_of_solutions(s.solutions);
  return j;
}

inline SolutionSet solution_set_from_json(const Json& j) {
  return SolutionSet{equation_from_json(j.at("equation")),
                     j.at("exponent_max").get<unsigned>(),
                     solutions_from_json(j.at("solutions"))};
}

inline Json json_of_row(const PairRow& row) {
  Json j;
  j["c"] = to_dec(row.c);
  j["p"] = to_dec(row.p);
  j["verdict"] = std::string(to_string(row.verdict));
  j["solution_count"] = row.solutions.size();
  j["solutions"] = json_of_solutions(row.solutions);
  j["nontrivial_count"] = row.nontrivial_count;
  return j;
}

inline PairRow row_from_json(const Json& j) {
  PairRow row;
  row.c = natural_from_json(j.at("c"));
  row.p = natural_from_json(j.at("p"));
  const auto kind = verdict_kind_from_string(j.at("verdict").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown verdict kind in report");
  row.verdict = *kind;
  row.solutions = solutions_from_json(j.at("solutions"));
  row.nontrivial_count = j.at("nontrivial_count").get<unsigned>();
  return row;
}

inline Json json_of_rows(const std::vector<PairRow>& rows) {
  Json arr = Json::array();
  for (const PairRow& r : rows) arr.push_back(json_of_row(r));
  return arr;
}

inline std::vector<PairRow> rows_from_json(const Json& arr) {
  std::vector<PairRow> out;
  for (const auto& e : arr) out.push_back(row_from_json(e));
  return out;
}

inline Json json_of_mismatches(const std::vector<Mismatch>& ms) {
  Json arr = Json::array();
  for (const Mismatch& m : ms)
    arr.push_back({{"c", to_dec(m.c)}, {"p", to_dec(m.p)}, {"reason", m.reason}});
  return arr;
}

inline std::vector<Mismatch> mismatches_from_json(const Json& arr) {
  std::vector<Mismatch> out;
  for (const auto& e : arr)
    out.push_back(Mismatch{natural_from_json(e.at("c")),
                           natural_from_json(e.at("p")),
                           e.at("reason").get<std::string>()});
  return out;
}

// ---------------------------------------------------------------------------
// Envelope
//
// Top-level schema, in key order: command, bounds, results, violations,
// mismatches, warnings, elapsed_ms. Scan commands append nontrivial_hits
// and (mersenne only) small_exponent_hits. elapsed_ms is null unless
// timing was explicitly requested, keeping json output byte-reproducible.

inline Json make_envelope(std::string_view command, Json bounds, Json results,
                          Json violations, Json mismatches, Json warnings,
                          std::optional<std::uint64_t> elapsed_ms) {
  Json j;
  j["command"] = std::string(command);
  j["bounds"] = std::move(bounds);
  j["results"] = std::move(results);
  j["violations"] = std::move(violations);
  j["mismatches"] = std::move(mismatches);
  j["warnings"] = std::move(warnings);
  if (elapsed_ms)
    j["elapsed_ms"] = *elapsed_ms;
  else
    j["elapsed_ms"] = nullptr;
  return j;
}

inline Json envelope_of_scan(std::string_view command, const ScanReport& r,
                             std::optional<std::uint64_t> elapsed_ms) {
  Json bounds;
  bounds["c_max"] = to_dec(r.grid.c_max);
  bounds["p_max"] = to_dec(r.grid.p_max);
  bounds["n_max"] = std::to_string(r.grid.n_max);
  Json j = make_envelope(command, std::move(bounds), json_of_rows(r.per_pair),
                         json_of_rows(r.violations),
                         json_of_mismatches(r.classifier_mismatches),
                         Json::array(), elapsed_ms);
  j["nontrivial_hits"] = json_of_rows(r.nontrivial_hits);
  if (command == "mersenne-scan")
    j["small_exponent_hits"] = json_of_rows(r.small_exponent_hits);
  return j;
}

inline std::vector<ClassifiedPair> classified_pairs_from_envelope(const Json& j) {
  std::vector<ClassifiedPair> out;
  for (const auto& e : j.at("results")) out.push_back(classified_pair_from_json(e));
  return out;
}

inline std::vector<SolutionSet> solution_sets_from_envelope(const Json& j) {
  std::vector<SolutionSet> out;
  for (const auto& e : j.at("results")) out.push_back(solution_set_from_json(e));
  return out;
}

inline ScanReport scan_report_from_envelope(const Json& j) {
  ScanReport r;
  r.grid.c_max = natural_from_json(j.at("bounds").at("c_max"));
  r.grid.p_max = natural_from_json(j.at("bounds").at("p_max"));
  r.grid.n_max =
      static_cast<unsigned>(std::stoul(j.at("bounds").at("n_max").get<std::string>()));
  r.per_pair = rows_from_json(j.at("results"));
  r.violations = rows_from_json(j.at("violations"));
  r.classifier_mismatches = mismatches_from_json(j.at("mismatches"));
  r.nontrivial_hits = rows_from_json(j.at("nontrivial_hits"));
  if (j.contains("small_exponent_hits"))
    r.small_exponent_hits = rows_from_json(j.at("small_exponent_hits"));
  return r;
}

/// Serialize with a stable layout; reports end with a newline.
inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Solutions joined as x^2*c@n triples, e.g. "5^2*1@3;11^2*1@3".
inline std::string solutions_csv_field(const Natural& c,
                                       const std::vector<Solution>& sols) {
  std::string out;
  for (const Solution& s : sols) {
    if (!out.empty()) out += ';';
    out += to_dec(s.x) + "^2*" + to_dec(c) + "@" + std::to_string(s.exponent);
  }
  return out;
}

inline std::string csv_of_scan(const ScanReport& r) {
  std::string out = "c,p,verdict,solution_count,solutions,nontrivial_count\n";
  for (const PairRow& row : r.per_pair) {
    out += to_dec(row.c) + "," + to_dec(row.p) + "," +
           std::string(to_string(row.verdict)) + "," +
           std::to_string(row.solutions.size()) + "," +
           solutions_csv_field(row.c, row.solutions) + "," +
           std::to_string(row.nontrivial_count) + "\n";
  }
  return out;
}

inline std::string csv_of_solution_set(const SolutionSet& s) {
  std::string out = "x,exponent\n";
  for (const Solution& sol : s.solutions)
    out += to_dec(sol.x) + "," + std::to_string(sol.exponent) + "\n";
  return out;
}

inline std::string csv_of_verdict(const Natural& c, const Natural& p,
                                  const Verdict& v) {
  std::string out = "c,p,verdict,predicted_solutions,note\n";
  out += to_dec(c) + "," + to_dec(p) + "," + std::string(to_string(v.kind)) +
         "," + solutions_csv_field(c, v.predicted_solutions) + "," +
         detail::csv_escape(v.note) + "\n";
  return out;
}

}  // namespace gmn
