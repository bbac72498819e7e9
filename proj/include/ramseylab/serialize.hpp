#pragma once

/**
 * JSON forms for every result type the CLI emits. Exact rationals serialize
 * as "num/den" strings, never floats, in any verdict-bearing field; keys are
 * emitted sorted, so equal results give byte-identical documents.
 */

#include <string>

#include <json.hpp>

#include "ramseylab/binary_matrix.hpp"
#include "ramseylab/builder.hpp"
#include "ramseylab/diophantine.hpp"
#include "ramseylab/quadratic.hpp"
#include "ramseylab/rational.hpp"
#include "ramseylab/spread.hpp"
#include "ramseylab/trials.hpp"

namespace ramseylab::io {

using nlohmann::json;

inline json to_json(const convex::SpreadResult& r) {
  json j;
  j["optimum"] = r.optimum ? json(rational_to_string(*r.optimum)) : json();
  j["satisfies"] = r.satisfies;
  j["source"] = r.source;
  auto w = json::array();
  if (r.witness)
    for (const auto& p : r.witness->weights) w.push_back(rational_to_string(p));
  j["witness"] = w;
  if (r.halving_bound) j["halving_bound"] = rational_to_string(*r.halving_bound);
  return j;
}

inline convex::SpreadResult spread_result_from_json(const json& j) {
  convex::SpreadResult r;
  if (!j.at("optimum").is_null())
    r.optimum = rational_from_string(j.at("optimum").get<std::string>());
  r.satisfies = j.at("satisfies").get<bool>();
  r.source = j.at("source").get<std::string>();
  if (!j.at("witness").empty()) {
    convex::ProbabilityVector w;
    for (const auto& p : j.at("witness"))
      w.weights.push_back(rational_from_string(p.get<std::string>()));
    r.witness = std::move(w);
  }
  if (j.contains("halving_bound"))
    r.halving_bound = rational_from_string(j.at("halving_bound").get<std::string>());
  return r;
}

// Witness columns are reported 1-based, matching the usual matrix notation.
inline json to_json(const matrices::ConfigReport& r) {
  json j;
  j["holds"] = r.holds;
  if (r.missing) {
    json m;
    auto cols = json::array();
    for (auto c : r.missing->columns) cols.push_back(c + 1);
    m["columns"] = cols;
    m["values"] = r.missing->values;
    j["missing"] = m;
  } else {
    j["missing"] = json();
  }
  return j;
}

inline json to_json(const trials::TrialResult& r) {
  json j;
  j["config_ok"] = r.config_ok;
  j["convex_failed"] = r.convex_failed;
  j["verdict_source"] = r.verdict_source;
  j["halving_bound"] = rational_to_string(r.halving_bound);
  j["flip_counts"] = r.flip_counts;
  j["elapsed_us"] = r.elapsed.count();
  return j;
}

inline json to_json(const trials::BoundsReport& r) {
  json j;
  j["config_union_bound"] = r.config_union_bound;
  j["kl"] = r.kl;
  j["flip_tail_bound"] = r.flip_tail_bound ? json(*r.flip_tail_bound) : json();
  return j;
}

inline json to_json(const std::vector<trials::SweepRow>& rows) {
  auto arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["n"] = r.n;
    j["p"] = rational_to_string(r.p);
    j["trials"] = r.trials;
    j["config_ok"] = r.config_ok;
    j["convex_failed"] = r.convex_failed;
    j["both"] = r.both;
    j["mean_flip_fraction"] = r.mean_flip_fraction;
    arr.push_back(j);
  }
  return arr;
}

inline json to_json(const predim::QuadValue& v) {
  json j;
  j["a"] = v.a;
  j["b"] = v.b;
  j["c"] = v.c;
  j["d"] = v.d;
  j["approx"] = v.to_double();
  return j;
}

inline json to_json(const predim::ApproxPair& p) {
  json j;
  j["r"] = p.r;
  j["s"] = p.s;
  return j;
}

inline json to_json(const builder::VerificationReport& rep) {
  auto arr = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  json out;
  out["checks"] = arr;
  out["all_pass"] = rep.all_pass();
  return out;
}

inline json to_json(const builder::EFParams& p) {
  json j;
  j["N"] = p.n_bound;
  j["m"] = p.m;
  j["r"] = p.r;
  j["s"] = p.s;
  j["r0"] = p.r0;
  j["r1"] = p.r1;
  j["m0"] = p.m0;
  j["m1"] = p.m1;
  j["extra0"] = p.extra0;
  j["extra1"] = p.extra1;
  return j;
}

inline json to_json(const builder::ABParams& p) {
  json j;
  j["n"] = p.n;
  j["C"] = p.big_c;
  j["r"] = p.r;
  j["s"] = p.s;
  j["eps"] = to_json(p.eps);
  j["subsets"] = p.subsets;
  j["vertices"] = p.vertices;
  j["edges"] = p.edges;
  return j;
}

inline std::string dump_sorted(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ramseylab::io
