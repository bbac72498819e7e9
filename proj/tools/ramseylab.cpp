// Command-line laboratory: matrix generation and checks, Monte-Carlo sweeps,
// pre-dimension calculus, incidence extraction and colorings.
//
// Every artifact is a JSON document {command, inputs, result} whose inputs
// embed all data needed to recompute the result, so any artifact can be
// replayed later with --verify-only. Exit codes: 0 = success / positive
// verdict, 1 = the check ran and says no, 2 = usage or domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseylab/builder.hpp"
#include "ramseylab/diophantine.hpp"
#include "ramseylab/embeddings.hpp"
#include "ramseylab/incidence.hpp"
#include "ramseylab/serialize.hpp"
#include "ramseylab/spread.hpp"
#include "ramseylab/trials.hpp"

using namespace ramseylab;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON in '") + path + "': " + e.what());
  }
}

predim::EngineOptions engine_options(const json& in) {
  predim::EngineOptions opts;
  if (in.contains("limit")) opts.brute_force_limit = in.at("limit").get<std::size_t>();
  return opts;
}

std::vector<std::string> labels_of(const json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

json labels_json(const predim::Graph& g, const Bitset& set) {
  auto arr = json::array();
  set.for_each([&](std::size_t v) { arr.push_back(g.label(v)); });
  return arr;
}

// ---- command implementations: inputs JSON -> result JSON ----

json run_gen_matrix(const json& in) {
  auto base = trials::base_matrix(in.at("n").get<std::size_t>());
  auto m = trials::perturb(base, rational_from_string(in.at("p").get<std::string>()),
                           in.at("seed").get<std::uint64_t>(),
                           in.at("trial").get<std::size_t>());
  json r;
  r["matrix"] = matrices::matrix_to_string(m);
  return r;
}

json run_check_config(const json& in) {
  auto m = matrices::parse_matrix(in.at("matrix").get<std::string>());
  auto rep = matrices::k_config_check(m, in.at("k").get<std::size_t>());
  return io::to_json(rep);
}

json run_check_convex(const json& in) {
  auto m = matrices::parse_matrix(in.at("matrix").get<std::string>());
  convex::DecideOptions opts;
  if (in.value("natural_split", false)) {
    require(m.n_cols() % 2 == 0, ErrorCode::DomainError,
            "natural split needs an even column count");
    opts.halving_split = trials::natural_bipartition(m.n_cols());
  }
  if (in.contains("lp_row_limit"))
    opts.exact_lp_row_limit = in.at("lp_row_limit").get<std::size_t>();
  return io::to_json(convex::convex_ramsey_decide(m, opts));
}

json run_sweep(const json& in) {
  auto ns = in.at("ns").get<std::vector<std::size_t>>();
  std::size_t k = in.at("k").get<std::size_t>();
  Rational eps = rational_from_string(in.at("eps").get<std::string>());
  std::size_t trials_n = in.at("trials").get<std::size_t>();
  std::uint64_t seed = in.at("seed").get<std::uint64_t>();

  auto rows = trials::sweep(ns, k, eps, trials_n, seed);
  json r;
  r["rows"] = io::to_json(rows);
  r["csv"] = trials::sweep_csv(rows);
  // Per-trial verdict sources, one list per n.
  auto log = json::array();
  for (const auto& row : rows) {
    auto sources = json::array();
    for (std::size_t t = 0; t < row.trials; ++t) {
      trials::TrialSpec spec{row.n, k, row.p, seed, t};
      sources.push_back(trials::run_trial(spec).verdict_source);
    }
    log.push_back(sources);
  }
  r["trial_sources"] = log;
  return r;
}

json run_bounds(const json& in) {
  auto rep = trials::bounds(in.at("n").get<std::size_t>(),
                            rational_from_string(in.at("p").get<std::string>()),
                            rational_from_string(in.at("t").get<std::string>()));
  return io::to_json(rep);
}

json run_delta(const json& in) {
  auto g = predim::Graph::from_json(in.at("graph"));
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  Bitset set = in.contains("set") ? g.set_of(labels_of(in.at("set")))
                                  : g.full_set();
  predim::DeltaValue d =
      in.contains("base")
          ? predim::rel_delta(g, set, g.set_of(labels_of(in.at("base"))))
          : predim::delta_of(g, set);
  json r;
  r["v"] = d.v;
  r["e"] = d.e;
  r["value"] = io::to_json(d.eval(alpha));
  return r;
}

json run_member(const json& in) {
  auto g = predim::Graph::from_json(in.at("graph"));
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto rep = predim::kalpha_member(g, alpha, engine_options(in));
  json r;
  r["member"] = rep.member;
  r["violator"] = rep.violator ? labels_json(g, *rep.violator) : json();
  return r;
}

json run_closed(const json& in) {
  auto g = predim::Graph::from_json(in.at("graph"));
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  json r;
  r["closed"] = predim::is_closed(g.set_of(labels_of(in.at("set"))), g, alpha,
                                  engine_options(in));
  return r;
}

json run_closure(const json& in) {
  auto g = predim::Graph::from_json(in.at("graph"));
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  Bitset cl = predim::closure(g.set_of(labels_of(in.at("set"))), g, alpha,
                              engine_options(in));
  json r;
  r["closure"] = labels_json(g, cl);
  return r;
}

json run_amalgam(const json& in) {
  auto left = predim::Graph::from_json(in.at("left"));
  auto right = predim::Graph::from_json(in.at("right"));
  auto g = predim::free_amalgam(left, right, labels_of(in.at("shared")));
  json r;
  r["graph"] = g.to_json();
  return r;
}

json run_approx(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  predim::ApproxPair pair;
  if (in.contains("lo")) {
    predim::HitOptions opts;
    if (in.contains("r_min")) opts.r_min = in.at("r_min").get<long long>();
    if (in.contains("r_cap")) opts.r_cap = in.at("r_cap").get<long long>();
    pair = predim::hit_interval(
        alpha,
        predim::QuadValue::rational(
            rational_from_string(in.at("lo").get<std::string>()), alpha.d()),
        predim::QuadValue::rational(
            rational_from_string(in.at("hi").get<std::string>()), alpha.d()),
        opts);
  } else {
    long long s_cap = in.value("s_cap", (long long)1'000'000'000'000LL);
    pair = predim::approx_below(alpha, in.at("N").get<long long>(), s_cap);
  }
  json r = io::to_json(pair);
  r["error"] = io::to_json(predim::DeltaValue(pair.r, pair.s).eval(alpha));
  return r;
}

json run_build_ef(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto f = predim::Graph::from_json(in.at("f"));
  auto res = builder::build_ef(alpha, in.at("N").get<long long>(), f);
  json r;
  r["graph"] = res.ef.to_json();
  r["e"] = labels_json(res.ef, res.e_set);
  r["f"] = labels_json(res.ef, res.f_set);
  r["params"] = io::to_json(res.params);
  r["report"] = io::to_json(res.report);
  return r;
}

json run_build_ab(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto res = builder::build_ab(alpha, in.at("n").get<std::size_t>(),
                               in.at("C").get<long long>());
  json r;
  r["a"] = res.a.to_json();
  r["b"] = res.b.to_json();
  auto tris = json::array();
  for (const auto& t : res.triangles) tris.push_back(labels_json(res.b, t));
  r["triangles"] = tris;
  r["params"] = io::to_json(res.params);
  r["report"] = io::to_json(res.report);
  return r;
}

json run_glue(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto b = predim::Graph::from_json(in.at("b"));
  auto a = predim::Graph::from_json(in.at("a"));
  auto g = builder::glue_lines(
      b, a, builder::glue_pattern_from_string(in.at("pattern").get<std::string>()),
      in.at("count").get<std::size_t>(), alpha);
  json r;
  r["graph"] = g.to_json();
  return r;
}

json run_extract(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto x = predim::Graph::from_json(in.at("x"));
  auto a = predim::Graph::from_json(in.at("a"));
  auto b = predim::Graph::from_json(in.at("b"));
  predim::EmbedOptions opts;
  opts.engine = engine_options(in);
  auto inc = incidence::extract_incidence(x, a, b, alpha, opts);
  json r;
  r["incidence"] = inc.to_json();
  return r;
}

json run_pseudoplane(const json& in) {
  auto inc = incidence::IncidenceStructure::from_json(in.at("incidence"));
  json r;
  r["is_k_pseudoplane"] = incidence::is_k_pseudoplane(inc, in.at("k").get<std::size_t>());
  return r;
}

json run_free(const json& in) {
  auto inc = incidence::IncidenceStructure::from_json(in.at("incidence"));
  std::vector<std::size_t> order;
  if (in.contains("order")) order = in.at("order").get<std::vector<std::size_t>>();
  auto [free, st] =
      incidence::is_free_k_pseudoplane(inc, in.at("k").get<std::size_t>(), order);
  json r;
  r["free"] = free;
  r["sweeps"] = st.sweeps;
  auto residual = json::array();
  for (const auto& p : inc.points())
    if (p.vertices.is_subset_of(st.alive)) residual.push_back(p.name);
  r["residual_points"] = residual;
  return r;
}

json run_color(const json& in) {
  auto inc = incidence::IncidenceStructure::from_json(in.at("incidence"));
  auto m = matrices::parse_matrix(in.at("matrix").get<std::string>());
  incidence::ColoringOptions opts;
  if (in.contains("order"))
    opts.order = in.at("order").get<std::vector<std::size_t>>();
  opts.check_config = in.value("check", true);
  auto coloring =
      incidence::consistent_coloring(inc, m, in.at("k").get<std::size_t>(), opts);
  json r;
  r["coloring"] = coloring.to_json(inc);
  r["valid"] = incidence::verify_coloring(inc, m, coloring);
  return r;
}

json run_verify_color(const json& in) {
  auto inc = incidence::IncidenceStructure::from_json(in.at("incidence"));
  auto m = matrices::parse_matrix(in.at("matrix").get<std::string>());
  auto coloring = incidence::Coloring::from_json(inc, in.at("coloring"));
  json r;
  r["valid"] = incidence::verify_coloring(inc, m, coloring);
  return r;
}

json run_extend(const json& in) {
  auto alpha = predim::Alpha::parse(in.at("alpha").get<std::string>());
  auto m = predim::Graph::from_json(in.at("m"));
  auto b = predim::Graph::from_json(in.at("b"));
  auto a = predim::Graph::from_json(in.at("a"));
  auto res =
      builder::extend_generic(m, labels_of(in.at("image")), b, a, alpha);
  json r;
  r["graph"] = res.extended.to_json();
  r["new_copy"] = labels_json(res.extended, res.new_copy);
  r["report"] = io::to_json(res.report);
  return r;
}

json run_command(const std::string& cmd, const json& in) {
  if (cmd == "gen-matrix") return run_gen_matrix(in);
  if (cmd == "check-config") return run_check_config(in);
  if (cmd == "check-convex") return run_check_convex(in);
  if (cmd == "sweep") return run_sweep(in);
  if (cmd == "bounds") return run_bounds(in);
  if (cmd == "delta") return run_delta(in);
  if (cmd == "member") return run_member(in);
  if (cmd == "closed") return run_closed(in);
  if (cmd == "closure") return run_closure(in);
  if (cmd == "amalgam") return run_amalgam(in);
  if (cmd == "approx") return run_approx(in);
  if (cmd == "build-ef") return run_build_ef(in);
  if (cmd == "build-ab") return run_build_ab(in);
  if (cmd == "glue") return run_glue(in);
  if (cmd == "extract") return run_extract(in);
  if (cmd == "pseudoplane") return run_pseudoplane(in);
  if (cmd == "free") return run_free(in);
  if (cmd == "color") return run_color(in);
  if (cmd == "verify-color") return run_verify_color(in);
  if (cmd == "extend") return run_extend(in);
  fail(ErrorCode::DomainError, "unknown command '" + cmd + "'");
}

// Negative verdicts exit 1; anything else 0.
int exit_code_for(const std::string& cmd, const json& result) {
  auto flag = [&](const char* key) { return result.at(key).get<bool>() ? 0 : 1; };
  if (cmd == "check-config") return flag("holds");
  if (cmd == "check-convex") return flag("satisfies");
  if (cmd == "member") return flag("member");
  if (cmd == "closed") return flag("closed");
  if (cmd == "pseudoplane") return flag("is_k_pseudoplane");
  if (cmd == "free") return flag("free");
  if (cmd == "verify-color" || cmd == "color") return flag("valid");
  if (cmd == "build-ef" || cmd == "build-ab" || cmd == "extend")
    return result.at("report").at("all_pass").get<bool>() ? 0 : 1;
  return 0;
}

struct Global {
  std::uint64_t seed = 2024;
  std::string alpha = "quad:-1,1,1,2";
  std::string out;
  std::string format;  // per-command default when empty
  std::size_t limit = 22;
  std::string verify_only;
};

void write_output(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + g.out + "'");
  out << text;
}

// Runs a command (or replays an artifact when --verify-only is set), writes
// the artifact, returns the exit code.
int dispatch(const Global& g, const std::string& cmd, const json& inputs,
             const std::string& default_format) {
  if (!g.verify_only.empty()) {
    json artifact = read_json(g.verify_only);
    require(artifact.at("command").get<std::string>() == cmd,
            ErrorCode::DomainError,
            "artifact was produced by '" +
                artifact.at("command").get<std::string>() + "', not '" + cmd + "'");
    json recomputed = run_command(cmd, artifact.at("inputs"));
    bool match = recomputed == artifact.at("result");
    json verdict;
    verdict["command"] = cmd;
    verdict["verified"] = match;
    write_output(g, io::dump_sorted(verdict));
    return match ? 0 : 1;
  }

  json result = run_command(cmd, inputs);
  std::string format = g.format.empty() ? default_format : g.format;
  if (format == "text" && cmd == "gen-matrix") {
    write_output(g, result.at("matrix").get<std::string>());
  } else if (format == "csv" && cmd == "sweep") {
    write_output(g, result.at("csv").get<std::string>());
  } else {
    json artifact;
    artifact["command"] = cmd;
    artifact["inputs"] = inputs;
    artifact["result"] = result;
    write_output(g, io::dump_sorted(artifact));
  }
  return exit_code_for(cmd, result);
}

json graph_from_file(const std::string& path) { return read_json(path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for convex Ramsey matrices and pre-dimension constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  Global g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--alpha", g.alpha, "irrational coefficient, e.g. quad:-1,1,1,2");
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--format", g.format, "json|csv|text, overriding the default")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--limit", g.limit, "brute-force subset limit");
  app.add_option("--verify-only", g.verify_only,
                 "replay a previously emitted artifact and compare");

  int exit_code = 0;
  auto guard = [&](auto fn) {
    return [&, fn]() {
      try {
        exit_code = fn();
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 2;
      }
    };
  };

  // gen-matrix
  {
    auto* c = app.add_subcommand("gen-matrix", "half-ones base matrix with Bernoulli flips");
    auto n = std::make_shared<std::size_t>(8);
    auto p = std::make_shared<std::string>("0");
    auto trial = std::make_shared<std::size_t>(0);
    c->add_option("--n", *n, "even dimension")->required();
    c->add_option("--p", *p, "flip probability num/den");
    c->add_option("--trial", *trial, "trial index");
    c->callback(guard([&, n, p, trial]() {
      json in{{"n", *n}, {"p", *p}, {"seed", g.seed}, {"trial", *trial}};
      return dispatch(g, "gen-matrix", in, "text");
    }));
  }
  // check-config
  {
    auto* c = app.add_subcommand("check-config", "k-configuration exhibition check");
    auto path = std::make_shared<std::string>();
    auto k = std::make_shared<std::size_t>(2);
    c->add_option("--matrix", *path, "matrix text file")->required();
    c->add_option("--k", *k, "configuration size");
    c->callback(guard([&, path, k]() {
      json in{{"matrix", read_file(*path)}, {"k", *k}};
      return dispatch(g, "check-config", in, "json");
    }));
  }
  // check-convex
  {
    auto* c = app.add_subcommand("check-convex", "convex Ramsey decision: min spread vs 1/2");
    auto path = std::make_shared<std::string>();
    auto natural = std::make_shared<bool>(false);
    c->add_option("--matrix", *path, "matrix text file")->required();
    c->add_flag("--natural-split", *natural, "try the left/right halving certificate first");
    c->callback(guard([&, path, natural]() {
      json in{{"matrix", read_file(*path)}, {"natural_split", *natural}};
      return dispatch(g, "check-convex", in, "json");
    }));
  }
  // sweep
  {
    auto* c = app.add_subcommand("sweep", "empirical rates over a list of n");
    auto ns = std::make_shared<std::string>("128,256,512,1024");
    auto k = std::make_shared<std::size_t>(2);
    auto eps = std::make_shared<std::string>("2356/10000");
    auto trials_n = std::make_shared<std::size_t>(50);
    c->add_option("--ns", *ns, "comma-separated dimensions");
    c->add_option("--k", *k, "configuration size");
    c->add_option("--eps", *eps, "epsilon as num/den or decimal");
    c->add_option("--trials", *trials_n, "trials per n");
    c->callback(guard([&, ns, k, eps, trials_n]() {
      std::vector<std::size_t> dims;
      std::stringstream ss(*ns);
      for (std::string tok; std::getline(ss, tok, ',');)
        dims.push_back((std::size_t)std::stoull(tok));
      std::string e = *eps;
      if (e.find('.') != std::string::npos) {
        // decimal -> exact rational
        auto dot = e.find('.');
        std::string frac = e.substr(dot + 1);
        std::string num = e.substr(0, dot) + frac;
        std::string den = "1" + std::string(frac.size(), '0');
        e = num + "/" + den;
      }
      json in{{"ns", dims}, {"k", *k}, {"eps", e}, {"trials", *trials_n}, {"seed", g.seed}};
      return dispatch(g, "sweep", in, "csv");
    }));
  }
  // bounds
  {
    auto* c = app.add_subcommand("bounds", "union and binomial tail bounds");
    auto n = std::make_shared<std::size_t>(1024);
    auto p = std::make_shared<std::string>("4/25");
    auto t = std::make_shared<std::string>("1/4");
    c->add_option("--n", *n, "dimension");
    c->add_option("--p", *p, "flip probability");
    c->add_option("--t", *t, "flip fraction");
    c->callback(guard([&, n, p, t]() {
      json in{{"n", *n}, {"p", *p}, {"t", *t}};
      return dispatch(g, "bounds", in, "json");
    }));
  }
  // delta
  {
    auto* c = app.add_subcommand("delta", "pre-dimension of a vertex set");
    auto path = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto base = std::make_shared<std::string>();
    c->add_option("--graph", *path, "graph JSON file")->required();
    c->add_option("--set", *set, "comma-separated labels (default: all)");
    c->add_option("--base", *base, "relative base labels");
    c->callback(guard([&, path, set, base]() {
      json in{{"graph", graph_from_file(*path)}, {"alpha", g.alpha}};
      auto split = [](const std::string& s) {
        json arr = json::array();
        std::stringstream ss(s);
        for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(tok);
        return arr;
      };
      if (!set->empty()) in["set"] = split(*set);
      if (!base->empty()) in["base"] = split(*base);
      return dispatch(g, "delta", in, "json");
    }));
  }
  // member / closed / closure
  {
    auto* c = app.add_subcommand("member", "membership in K_alpha");
    auto path = std::make_shared<std::string>();
    c->add_option("--graph", *path)->required();
    c->callback(guard([&, path]() {
      json in{{"graph", graph_from_file(*path)}, {"alpha", g.alpha}, {"limit", g.limit}};
      return dispatch(g, "member", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("closed", "closedness of a vertex set");
    auto path = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    c->add_option("--graph", *path)->required();
    c->add_option("--set", *set, "comma-separated labels")->required();
    c->callback(guard([&, path, set]() {
      json arr = json::array();
      std::stringstream ss(*set);
      for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(tok);
      json in{{"graph", graph_from_file(*path)}, {"alpha", g.alpha},
              {"set", arr}, {"limit", g.limit}};
      return dispatch(g, "closed", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("closure", "least closed superset");
    auto path = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    c->add_option("--graph", *path)->required();
    c->add_option("--set", *set)->required();
    c->callback(guard([&, path, set]() {
      json arr = json::array();
      std::stringstream ss(*set);
      for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(tok);
      json in{{"graph", graph_from_file(*path)}, {"alpha", g.alpha},
              {"set", arr}, {"limit", g.limit}};
      return dispatch(g, "closure", in, "json");
    }));
  }
  // amalgam
  {
    auto* c = app.add_subcommand("amalgam", "free amalgam over shared labels");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto shared = std::make_shared<std::string>();
    c->add_option("--left", *left)->required();
    c->add_option("--right", *right)->required();
    c->add_option("--shared", *shared, "comma-separated shared labels")->required();
    c->callback(guard([&, left, right, shared]() {
      json arr = json::array();
      std::stringstream ss(*shared);
      for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(tok);
      json in{{"left", graph_from_file(*left)}, {"right", graph_from_file(*right)},
              {"shared", arr}};
      return dispatch(g, "amalgam", in, "json");
    }));
  }
  // approx
  {
    auto* c = app.add_subcommand("approx", "Diophantine pairs r - alpha*s in a window");
    auto n = std::make_shared<long long>(10);
    auto s_cap = std::make_shared<long long>(1'000'000'000'000LL);
    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    auto r_min = std::make_shared<long long>(0);
    auto r_cap = std::make_shared<long long>(1'000'000);
    c->add_option("--N", *n, "window (-1/N, 0)");
    c->add_option("--s-cap", *s_cap, "denominator cap");
    c->add_option("--lo", *lo, "rational lower endpoint (interval mode)");
    c->add_option("--hi", *hi, "rational upper endpoint (interval mode)");
    c->add_option("--r-min", *r_min);
    c->add_option("--r-cap", *r_cap);
    c->callback(guard([&, n, s_cap, lo, hi, r_min, r_cap]() {
      json in{{"alpha", g.alpha}};
      if (!lo->empty() || !hi->empty()) {
        require(!lo->empty() && !hi->empty(), ErrorCode::DomainError,
                "interval mode needs both --lo and --hi");
        in["lo"] = *lo;
        in["hi"] = *hi;
        in["r_min"] = *r_min;
        in["r_cap"] = *r_cap;
      } else {
        in["N"] = *n;
        in["s_cap"] = *s_cap;
      }
      return dispatch(g, "approx", in, "json");
    }));
  }
  // build-ef / build-ab
  {
    auto* c = app.add_subcommand("build-ef", "bipartite extension with delta(E/F) in (-1/N, 0)");
    auto n = std::make_shared<long long>(10);
    auto f = std::make_shared<std::string>();
    c->add_option("--N", *n, "window parameter");
    c->add_option("--f", *f, "base graph JSON (default: 4 isolated vertices)");
    c->callback(guard([&, n, f]() {
      json fg = f->empty() ? predim::Graph::edgeless(4, "f").to_json()
                           : graph_from_file(*f);
      json in{{"alpha", g.alpha}, {"N", *n}, {"f", fg}};
      return dispatch(g, "build-ef", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("build-ab", "triangle pattern pair forming a free 2-pseudoplane");
    auto n = std::make_shared<std::size_t>(3);
    auto big_c = std::make_shared<long long>(17);
    c->add_option("--n", *n, "number of triangle copies");
    c->add_option("--C", *big_c, "window tightening constant");
    c->callback(guard([&, n, big_c]() {
      json in{{"alpha", g.alpha}, {"n", *n}, {"C", *big_c}};
      return dispatch(g, "build-ab", in, "json");
    }));
  }
  // glue / extract / pseudoplane / free / color / verify-color / extend
  {
    auto* c = app.add_subcommand("glue", "iterated free amalgams of line copies");
    auto b = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto pattern = std::make_shared<std::string>("chain");
    auto count = std::make_shared<std::size_t>(2);
    c->add_option("--b", *b, "line pattern graph JSON")->required();
    c->add_option("--a", *a, "point pattern graph JSON (default: K3)");
    c->add_option("--pattern", *pattern)->check(CLI::IsMember({"chain", "star", "cycle"}));
    c->add_option("--count", *count);
    c->callback(guard([&, b, a, pattern, count]() {
      json ag = a->empty() ? predim::Graph::complete(3).to_json() : graph_from_file(*a);
      json in{{"alpha", g.alpha}, {"b", graph_from_file(*b)}, {"a", ag},
              {"pattern", *pattern}, {"count", *count}};
      return dispatch(g, "glue", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("extract", "lines and points of a realized graph");
    auto x = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("--x", *x, "host graph JSON")->required();
    c->add_option("--a", *a, "point pattern (default: K3)");
    c->add_option("--b", *b, "line pattern graph JSON")->required();
    c->callback(guard([&, x, a, b]() {
      json ag = a->empty() ? predim::Graph::complete(3).to_json() : graph_from_file(*a);
      json in{{"alpha", g.alpha}, {"x", graph_from_file(*x)}, {"a", ag},
              {"b", graph_from_file(*b)}, {"limit", g.limit}};
      return dispatch(g, "extract", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("pseudoplane", "pairwise line intersection bound");
    auto inc = std::make_shared<std::string>();
    auto k = std::make_shared<std::size_t>(2);
    c->add_option("--incidence", *inc, "incidence JSON")->required();
    c->add_option("--k", *k);
    c->callback(guard([&, inc, k]() {
      json in{{"incidence", read_json(*inc)}, {"k", *k}};
      return dispatch(g, "pseudoplane", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("free", "peeling fixpoint and freeness verdict");
    auto inc = std::make_shared<std::string>();
    auto k = std::make_shared<std::size_t>(2);
    auto order = std::make_shared<std::string>();
    c->add_option("--incidence", *inc)->required();
    c->add_option("--k", *k);
    c->add_option("--order", *order, "comma-separated line indices");
    c->callback(guard([&, inc, k, order]() {
      json in{{"incidence", read_json(*inc)}, {"k", *k}};
      if (!order->empty()) {
        std::vector<std::size_t> ord;
        std::stringstream ss(*order);
        for (std::string tok; std::getline(ss, tok, ',');)
          ord.push_back((std::size_t)std::stoull(tok));
        in["order"] = ord;
      }
      return dispatch(g, "free", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("color", "consistent coloring from matrix rows");
    auto inc = std::make_shared<std::string>();
    auto mat = std::make_shared<std::string>();
    auto k = std::make_shared<std::size_t>(2);
    auto order = std::make_shared<std::string>();
    auto no_check = std::make_shared<bool>(false);
    c->add_option("--incidence", *inc)->required();
    c->add_option("--matrix", *mat)->required();
    c->add_option("--k", *k);
    c->add_option("--order", *order);
    c->add_flag("--no-check", *no_check, "skip the k-configuration precondition");
    c->callback(guard([&, inc, mat, k, order, no_check]() {
      json in{{"incidence", read_json(*inc)}, {"matrix", read_file(*mat)},
              {"k", *k}, {"check", !*no_check}};
      if (!order->empty()) {
        std::vector<std::size_t> ord;
        std::stringstream ss(*order);
        for (std::string tok; std::getline(ss, tok, ',');)
          ord.push_back((std::size_t)std::stoull(tok));
        in["order"] = ord;
      }
      return dispatch(g, "color", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("verify-color", "check a coloring against the matrix");
    auto inc = std::make_shared<std::string>();
    auto mat = std::make_shared<std::string>();
    auto col = std::make_shared<std::string>();
    c->add_option("--incidence", *inc)->required();
    c->add_option("--matrix", *mat)->required();
    c->add_option("--coloring", *col, "coloring JSON file")->required();
    c->callback(guard([&, inc, mat, col]() {
      json in{{"incidence", read_json(*inc)}, {"matrix", read_file(*mat)},
              {"coloring", read_json(*col)}};
      return dispatch(g, "verify-color", in, "json");
    }));
  }
  {
    auto* c = app.add_subcommand("extend", "one generic extension step");
    auto m = std::make_shared<std::string>();
    auto image = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    c->add_option("--m", *m, "current stage graph JSON")->required();
    c->add_option("--image", *image, "closed image labels, comma-separated")->required();
    c->add_option("--b", *b, "extension graph JSON")->required();
    c->add_option("--a", *a, "pattern graph JSON (default: K3)");
    c->callback(guard([&, m, image, b, a]() {
      json arr = json::array();
      std::stringstream ss(*image);
      for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(tok);
      json ag = a->empty() ? predim::Graph::complete(3).to_json() : graph_from_file(*a);
      json in{{"alpha", g.alpha}, {"m", graph_from_file(*m)}, {"image", arr},
              {"b", graph_from_file(*b)}, {"a", ag}};
      return dispatch(g, "extend", in, "json");
    }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}
