// Command-line front end: generation, embedding, verification, recognition,
// diameter, batch suites, and benchmarks, with JSON reports.
//
// Exit codes:
//   0  success (recognize: verdict "free")
//   2  input parse error
//   3  precondition violation (disconnected input, oversized parent set, ...)
//   4  verification failure or a "not-free" recognition verdict
//   5  search budget exhausted (inconclusive)
//   1  any other error

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tw2/diameter.hpp"
#include "tw2/embedder.hpp"
#include "tw2/generators.hpp"
#include "tw2/json_io.hpp"
#include "tw2/oracles.hpp"
#include "tw2/structure.hpp"

namespace {

using namespace tw2;

enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kParseFailure = 2,
  kPreconditionFailure = 3,
  kVerificationFailure = 4,
  kInconclusive = 5,
};

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string output_path;
  std::string trace_path;
  std::string layering_path;
  std::string report_path;
  int root = 0;
  bool fast_mode = false;
  bool with_exact = false;
  bool sweep_roots = false;
  bool deterministic_report = false;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string family = "chordal";
  int n = 50;
  int count = 10;
  std::uint64_t seed = 0;
  double edge_probability = 0.25;
  double extra_edge_density = 0.3;
  std::vector<int> sizes;
  std::vector<std::string> phases{"generate", "layering", "embed", "diameter_h"};

  json to_json() const {
    return json{{"command", command},
                {"input", input_path},
                {"output", output_path},
                {"root", root},
                {"mode", fast_mode ? "fast" : "general"},
                {"budget", budget},
                {"family", family},
                {"n", n},
                {"count", count},
                {"seed", seed},
                {"edge_probability", edge_probability},
                {"extra_edge_density", extra_edge_density},
                {"deterministic_report", deterministic_report}};
  }
};

EmbedMode mode_of(const RunConfig& cfg) {
  return cfg.fast_mode ? EmbedMode::kUniversallySignableFast : EmbedMode::kGeneral;
}

GenSpec spec_of(const RunConfig& cfg, std::uint64_t seed_offset = 0) {
  GenSpec spec;
  spec.family = family_from_name(cfg.family);
  spec.n = cfg.n;
  spec.edge_probability = cfg.edge_probability;
  spec.extra_edge_density = cfg.extra_edge_density;
  spec.seed = cfg.seed + seed_offset;
  return spec;
}

void emit(const json& j, const std::string& path) {
  if (path.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(j, path);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_gen(const RunConfig& cfg) {
  Graph g = generate(spec_of(cfg));
  if (cfg.output_path.empty())
    std::cout << serialize_graph(g);
  else
    write_graph_file(g, cfg.output_path);
  return kOk;
}

int cmd_embed(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input_path);
  auto result = embed(g, cfg.root, mode_of(cfg));
  if (cfg.output_path.empty())
    std::cout << serialize_graph(result.h);
  else
    write_graph_file(result.h, cfg.output_path);
  if (!cfg.trace_path.empty())
    write_json_file(branch_trace_to_json(cfg.root, result.branch_trace),
                    cfg.trace_path);
  if (!cfg.layering_path.empty())
    write_json_file(layering_to_json(build_layering(g, cfg.root)),
                    cfg.layering_path);
  return kOk;
}

struct CheckOutcome {
  json report;
  bool failed = false;
  bool inconclusive = false;
};

CheckOutcome check_one(const Graph& g, int root, EmbedMode mode,
                       std::uint64_t budget) {
  auto emb = embed(g, root, mode);
  auto lp = build_layering(g, root);
  auto distortion = distortion_report(g, emb.h, root, &lp);
  auto tw = treewidth_at_most_2(emb.h);
  auto triangle = find_triangle(emb.h);
  auto theta = find_theta(emb.h, budget);
  auto wheel = find_wheel(emb.h, budget);

  CheckOutcome out;
  out.report = check_report_to_json(distortion, tw.verdict, !triangle.has_value(),
                                    theta, wheel);
  out.failed = !distortion.root_equality || !distortion.violations.empty() ||
               distortion.max_abs_gap > 2470 || !tw.verdict ||
               triangle.has_value() ||
               theta.outcome == SearchOutcome::kFound ||
               wheel.outcome == SearchOutcome::kFound;
  out.inconclusive = theta.outcome == SearchOutcome::kInconclusive ||
                     wheel.outcome == SearchOutcome::kInconclusive;
  return out;
}

int cmd_check(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input_path);
  json report;
  bool failed = false, inconclusive = false;
  if (cfg.sweep_roots) {
    json per_root = json::array();
    for (int r = 0; r < g.vertex_count(); ++r) {
      auto one = check_one(g, r, mode_of(cfg), cfg.budget);
      one.report["root"] = r;
      failed |= one.failed;
      inconclusive |= one.inconclusive;
      per_root.push_back(std::move(one.report));
    }
    report = json{{"sweep", std::move(per_root)}, {"all_roots_pass", !failed}};
  } else {
    auto one = check_one(g, cfg.root, mode_of(cfg), cfg.budget);
    report = std::move(one.report);
    failed = one.failed;
    inconclusive = one.inconclusive;
  }
  report["config"] = cfg.to_json();
  emit(report, cfg.report_path);
  if (failed) return kVerificationFailure;
  if (inconclusive) return kInconclusive;
  return kOk;
}

int cmd_recognize(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input_path);
  auto report = find_truemper_configuration(g, cfg.budget);
  json j = recognition_to_json(report);
  if (g.vertex_count() <= 12) {
    Graph pattern = generate({.family = Family::kK23, .n = 5});
    j["direct_minor"] = induced_minor_bruteforce(g, pattern);
  }
  j["config"] = cfg.to_json();
  emit(j, cfg.report_path);
  switch (report.verdict) {
    case Verdict::kFree: return kOk;
    case Verdict::kNotFree: return kVerificationFailure;
    case Verdict::kInconclusive: return kInconclusive;
  }
  return kOtherError;
}

int cmd_diam(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input_path);
  auto result = diameter_via_embedding(g, cfg.root, mode_of(cfg), cfg.with_exact);
  json j = diameter_to_json(result, !cfg.deterministic_report);
  j["config"] = cfg.to_json();
  emit(j, cfg.report_path);
  return kOk;
}

bool universally_signable_family(Family f) {
  switch (f) {
    case Family::kTree:
    case Family::kCycle:
    case Family::kChordal:
    case Family::kSplit:
    case Family::kOuterplanar:
      return true;
    default:
      return false;
  }
}

int cmd_suite(const RunConfig& cfg) {
  Family fam = family_from_name(cfg.family);
  json instances = json::array();
  bool failed = false, inconclusive = false;
  int max_gap = 0;
  auto t0 = std::chrono::steady_clock::now();

  for (int i = 0; i < cfg.count; ++i) {
    GenSpec spec = spec_of(cfg, i);
    Graph g = generate(spec);
    json inst{{"spec", gen_spec_to_json(spec)},
              {"n", g.vertex_count()},
              {"m", g.edge_count()}};

    if (g.vertex_count() <= 30) {
      auto rec = find_truemper_configuration(g, cfg.budget);
      inst["certified_free"] = rec.verdict == Verdict::kFree;
      if (rec.verdict == Verdict::kNotFree) failed = true;
      if (rec.verdict == Verdict::kInconclusive) inconclusive = true;
    }

    auto one = check_one(g, cfg.root, EmbedMode::kGeneral, cfg.budget);
    failed |= one.failed;
    inconclusive |= one.inconclusive;
    max_gap = std::max(max_gap, one.report["max_abs_gap"].get<int>());

    if (universally_signable_family(fam)) {
      auto general = embed(g, cfg.root, EmbedMode::kGeneral);
      auto fast = embed(g, cfg.root, EmbedMode::kUniversallySignableFast);
      bool identical = serialize_graph(general.h) == serialize_graph(fast.h);
      inst["fast_mode_identical"] = identical;
      failed |= !identical;
    }

    auto diam = diameter_via_embedding(g, cfg.root, EmbedMode::kGeneral, true);
    inst["diameter"] = diameter_to_json(diam, false);
    failed |= std::abs(*diam.gap) > 2470;

    inst["facts"] = std::move(one.report);
    instances.push_back(std::move(inst));
  }

  json summary{{"count", cfg.count},
               {"max_abs_gap", max_gap},
               {"all_pass", !failed},
               {"inconclusive", inconclusive}};
  json report{{"config", cfg.to_json()},
              {"instances", std::move(instances)},
              {"summary", std::move(summary)}};
  if (!cfg.deterministic_report) report["timings"] = {{"total_ms", ms_since(t0)}};
  emit(report, cfg.report_path);
  if (failed) return kVerificationFailure;
  if (inconclusive) return kInconclusive;
  return kOk;
}

int cmd_bench(const RunConfig& cfg) {
  std::vector<int> sizes = cfg.sizes;
  if (sizes.empty()) sizes = {1000, 2000, 4000, 8000};
  struct Row {
    std::string phase;
    int n;
    int m;
    double millis;
  };
  std::vector<Row> rows;

  auto wants = [&](const std::string& phase) {
    return std::find(cfg.phases.begin(), cfg.phases.end(), phase) != cfg.phases.end();
  };
  for (int size : sizes) {
    RunConfig one = cfg;
    one.n = size;
    auto t0 = std::chrono::steady_clock::now();
    Graph g = generate(spec_of(one));
    if (wants("generate"))
      rows.push_back({"generate", g.vertex_count(), g.edge_count(), ms_since(t0)});

    if (wants("layering")) {
      t0 = std::chrono::steady_clock::now();
      auto lp = build_layering(g, cfg.root);
      rows.push_back({"layering", g.vertex_count(), g.edge_count(), ms_since(t0)});
    }

    t0 = std::chrono::steady_clock::now();
    auto emb = embed(g, cfg.root, mode_of(cfg));
    if (wants("embed"))
      rows.push_back({"embed", g.vertex_count(), g.edge_count(), ms_since(t0)});

    // all-source BFS: quadratic in n, so only sensible at desk scale
    if (wants("diameter_h")) {
      t0 = std::chrono::steady_clock::now();
      int dh = diameter_exact(emb.h);
      rows.push_back({"diameter_h", g.vertex_count(), g.edge_count(), ms_since(t0)});
      (void)dh;
    }
  }

  // least-squares slope of log(time) against log(n), per phase
  json fits;
  for (const std::string phase : {"generate", "layering", "embed", "diameter_h"}) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (const auto& r : rows) {
      if (r.phase != phase) continue;
      double x = std::log(static_cast<double>(r.n));
      double y = std::log(std::max(r.millis, 1e-3));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++k;
    }
    if (k >= 2) fits[phase] = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }

  std::string csv = "phase,n,m,millis\n";
  json jrows = json::array();
  for (const auto& r : rows) {
    csv += r.phase + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::to_string(r.millis) + "\n";
    jrows.push_back(json{{"phase", r.phase}, {"n", r.n}, {"m", r.m}, {"millis", r.millis}});
  }
  if (cfg.output_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(cfg.output_path);
    if (!out) throw Error("cannot write " + cfg.output_path);
    out << csv;
  }
  json report{{"config", cfg.to_json()}, {"rows", std::move(jrows)}, {"fit", fits}};
  if (!cfg.report_path.empty()) write_json_file(report, cfg.report_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered embedding of K_{2,3}-induced-minor-free graphs into "
               "tree-width-2 graphs, with verifiers, recognizers, generators, "
               "and a diameter pipeline"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--report", cfg.report_path, "write the JSON report here");
    sub->add_flag("--deterministic-report", cfg.deterministic_report,
                  "omit timings so reports diff byte-exactly");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family,
                    "tree|cycle|chordal|split|outerplanar|k23|broken_wheel|erdos_renyi");
    sub->add_option("--n", cfg.n, "vertex count");
    sub->add_option("--seed", cfg.seed, "base PRNG seed");
    sub->add_option("--p", cfg.edge_probability, "edge probability knob");
    sub->add_option("--density", cfg.extra_edge_density, "density knob");
  };

  auto* gen = app.add_subcommand("gen", "generate a corpus graph");
  add_family(gen);
  gen->add_option("--out", cfg.output_path, "output edge-list path");

  auto* emb = app.add_subcommand("embed", "embed a graph into a tree-width-2 host");
  emb->add_option("--in", cfg.input_path, "input edge-list path")->required();
  emb->add_option("--root", cfg.root, "root vertex (default 0)");
  emb->add_flag("--fast", cfg.fast_mode, "universally-signable fast path");
  emb->add_option("--out", cfg.output_path, "output edge-list path");
  emb->add_option("--trace", cfg.trace_path, "write the branch trace JSON");
  emb->add_option("--layering", cfg.layering_path, "write the layering JSON");

  auto* chk = app.add_subcommand("check", "embed and verify every promised bound");
  chk->add_option("--in", cfg.input_path)->required();
  chk->add_option("--root", cfg.root);
  chk->add_flag("--fast", cfg.fast_mode);
  chk->add_option("--budget", cfg.budget, "search budget for theta/wheel");
  chk->add_flag("--sweep-roots", cfg.sweep_roots, "verify every root choice");
  add_common(chk);

  auto* rec = app.add_subcommand("recognize", "search for a forbidden configuration");
  rec->add_option("--in", cfg.input_path)->required();
  rec->add_option("--budget", cfg.budget);
  add_common(rec);

  auto* dia = app.add_subcommand("diam", "diameter via the embedding pipeline");
  dia->add_option("--in", cfg.input_path)->required();
  dia->add_option("--root", cfg.root);
  dia->add_flag("--fast", cfg.fast_mode);
  dia->add_flag("--exact", cfg.with_exact, "also compute the exact diameter");
  add_common(dia);

  auto* sui = app.add_subcommand("suite", "generate, embed, and verify a batch");
  add_family(sui);
  sui->add_option("--count", cfg.count, "number of instances");
  sui->add_option("--root", cfg.root);
  sui->add_option("--budget", cfg.budget);
  add_common(sui);

  auto* ben = app.add_subcommand("bench", "timing ladder with fitted growth exponents");
  add_family(ben);
  ben->add_option("--sizes", cfg.sizes, "ladder sizes (default 1000 2000 4000 8000)");
  ben->add_option("--phases", cfg.phases,
                  "phases to time: generate layering embed diameter_h "
                  "(diameter_h is quadratic; drop it on large ladders)");
  ben->add_flag("--fast", cfg.fast_mode);
  ben->add_option("--root", cfg.root);
  ben->add_option("--out", cfg.output_path, "CSV output path");
  ben->add_option("--report", cfg.report_path, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) { cfg.command = "gen"; return cmd_gen(cfg); }
    if (emb->parsed()) { cfg.command = "embed"; return cmd_embed(cfg); }
    if (chk->parsed()) { cfg.command = "check"; return cmd_check(cfg); }
    if (rec->parsed()) { cfg.command = "recognize"; return cmd_recognize(cfg); }
    if (dia->parsed()) { cfg.command = "diam"; return cmd_diam(cfg); }
    if (sui->parsed()) { cfg.command = "suite"; return cmd_suite(cfg); }
    if (ben->parsed()) { cfg.command = "bench"; return cmd_bench(cfg); }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPreconditionFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOtherError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOtherError;
  }
  return kOtherError;
}
