#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "geoinsert/decide.hpp"
#include "geoinsert/export.hpp"
#include "geoinsert/fpt.hpp"
#include "geoinsert/instance_io.hpp"
#include "geoinsert/reroute.hpp"

namespace geoinsert::cli {

namespace fs = std::filesystem;

namespace {

Instance load(const std::string& file) {
  Instance inst = file == "-" ? parse_instance(std::cin, "stdin") : read_instance_file(file);
  const ValidationReport report = validate_embedding(inst.graph);
  if (!report.ok()) {
    std::string msg = "invalid embedding";
    for (const auto& m : report.messages) msg += "; " + m;
    throw InvalidEmbedding(msg);
  }
  return inst;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// crossings and consistency recomputed from the path itself
json path_report(const ExtendedDual& ed, const DualPath& p) {
  std::string why;
  if (!is_well_formed(ed, p, &why)) throw InternalError("malformed path: " + why);
  const InducedLabeling lab = induced_labeling(ed, p);
  return {{"path", path_json(ed, p)},
          {"length", p.length()},
          {"crossings", crossings_of_path(ed, p).count},
          {"consistent", lab.consistent()},
          {"induced_labeling", labeling_json(lab)}};
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

int oracle_bound(const RunOptions& opt, const ExtendedDual& ed) {
  return opt.bound > 0 ? opt.bound : testkit::default_oracle_bound(ed);
}

// writes one snapshot triple (instance text, flags, DOT) per changing pass
json dump_pipeline(const ExtendedDual& ed, const std::string& dir) {
  fs::create_directories(dir);
  json files = json::array();
  int index = 0;
  auto emit = [&](const std::string& label, const StFriendlyGraph& sf, const json& meta) {
    std::ostringstream stem;
    stem << std::setw(2) << std::setfill('0') << index++ << '_' << label;
    const Snapshot snap = snapshot(sf, stem.str());
    std::ostringstream text;
    write_instance(text, snap.instance);
    const fs::path base = fs::path(dir) / stem.str();
    write_text(base.string() + ".txt", text.str());
    json side = mixed_sidecar(sf, snap.id_of);
    merge(side, meta);
    write_text(base.string() + ".json", side.dump(2) + "\n");
    write_text(base.string() + ".dot", mixed_to_dot(sf));
    files.push_back(stem.str());
  };
  const ShortestPathDag dag = build_gsp(ed);
  StFriendlyGraph start = build_st_friendly(ed, dag);
  emit("initial", start, {{"pass", "initial"}});
  const Normalization norm = normalize(std::move(start), [&](const PassRecord& r, const StFriendlyGraph& sf) {
    if (r.changes == 0) return;
    emit(std::string(to_string(r.pass)), sf, {{"pass", to_string(r.pass)}, {"round", r.round}, {"changes", r.changes}});
  });
  return {{"snapshots", files}, {"rounds", norm.rounds}, {"postconditions", postconditions_json(check_postconditions(norm.graph))}};
}

json partner_route(const ExtendedDual& ed) {
  try {
    const PartnerDecision pd = decide_via_partners(ed);
    return {{"yes", pd.yes},
            {"interior_pairs", pd.system.interior.size()},
            {"exterior_pairs", pd.system.exterior.size()},
            {"chord_implications", pd.system.chords.size()},
            {"clauses", pd.clauses.clauses.size()},
            {"rounds", pd.normalization.rounds}};
  } catch (const InternalError& e) {
    return {{"error", e.what()}};
  }
}

int run_fpt(const RunOptions& opt, const ExtendedDual& ed, int dist, json& out) {
  FptOptions fo;
  fo.delta = opt.delta;
  fo.seed = opt.seed;
  fo.threads = opt.threads;
  const int first = opt.k > 0 ? opt.k : std::max(2, dist);
  const int last = opt.auto_k ? std::max(first, oracle_bound(opt, ed)) : first;
  json tries = json::array();
  for (int k = first; k <= last; ++k) {
    fo.k = k;
    const FptResult r = fpt_search(ed, fo);
    const bool hit = r.path && r.path->length() <= k;
    tries.push_back({{"k", k}, {"iterations", r.iterations}, {"found", hit}});
    if (hit) {
      out["found"] = true;
      out["k"] = k;
      out["tries"] = tries;
      merge(out, path_report(ed, *r.path));
      return kOk;
    }
  }
  out["found"] = false;
  out["tries"] = tries;
  return kNo;
}

}  // namespace

int cmd_validate(const std::string& file, json& out) {
  Instance inst = file == "-" ? parse_instance(std::cin, "stdin") : read_instance_file(file);
  const ValidationReport r = validate_embedding(inst.graph);
  out = {{"name", inst.name},   {"vertices", r.vertices}, {"edges", r.edges},       {"faces", r.faces},
         {"connected", r.connected}, {"simple", r.simple}, {"euler", r.euler},     {"valid", r.ok()},
         {"max_degree", inst.graph.max_degree()}, {"s", inst.s}, {"t", inst.t}, {"messages", r.messages}};
  if (!r.ok()) return kInput;
  const ExtendedDual ed = inst.dual();
  const ShortestPathDag dag = build_gsp(ed);
  out["dist"] = dag.length;
  out["common_face"] = check_common_face(ed, dag).found;
  return kOk;
}

int cmd_run(const RunOptions& opt, json& out) {
  const Instance inst = load(opt.file);
  const ExtendedDual ed = inst.dual();
  const int dist = build_gsp(ed).length;
  out = {{"algorithm", opt.algo},
         {"instance", inst.name},
         {"parameters",
          {{"k", opt.k}, {"delta", opt.delta}, {"seed", opt.seed}, {"bound", oracle_bound(opt, ed)},
           {"auto_k", opt.auto_k}, {"threads", opt.threads}}},
         {"dist", dist},
         {"max_degree", inst.graph.max_degree()}};
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;

  if (opt.algo == "bfs") {
    merge(out, path_report(ed, bfs_shortest(ed)));
  } else if (opt.algo == "deg5") {
    RerouteTrace trace;
    merge(out, path_report(ed, reroute_degree5(ed, &trace)));
    out["iterations"] = trace.iterations();
  } else if (opt.algo == "approx") {
    RerouteTrace trace;
    merge(out, path_report(ed, approx_delta(ed, &trace)));
    out["iterations"] = trace.iterations();
    out["loops_erased"] = trace.loops_erased;
    out["length_bound"] = std::max(1, inst.graph.max_degree() - 2) * dist;
  } else if (opt.algo == "2sat") {
    const Decision d = decide(ed);
    out["decision"] = d.yes ? "yes" : "no";
    out["variables"] = d.instance.variables;
    out["order_clauses"] = d.instance.count(ClauseKind::Order);
    out["exclusive_clauses"] = d.instance.count(ClauseKind::Exclusive);
    out["partner_route"] = partner_route(ed);
    if (d.yes) {
      merge(out, path_report(ed, *d.path));
      out["witness_partner"] = path_json(ed, *d.partner);
    }
    if (!opt.dump_dir.empty()) out["pipeline"] = dump_pipeline(ed, opt.dump_dir);
    code = d.yes ? kOk : kNo;
  } else if (opt.algo == "fpt") {
    code = run_fpt(opt, ed, dist, out);
  } else if (opt.algo == "oracle") {
    const testkit::OracleResult r = testkit::oracle_shortest_consistent(ed, oracle_bound(opt, ed));
    out["conclusive"] = r.conclusive();
    if (r.witness) merge(out, path_report(ed, *r.witness));
    code = r.conclusive() ? kOk : kNo;
  } else {
    throw InputError("unknown algorithm '" + opt.algo + "'");
  }
  out["elapsed_ms"] = ms_since(start);
  return code;
}

int cmd_compare(const RunOptions& opt, json& out) {
  const Instance inst = load(opt.file);
  const ExtendedDual ed = inst.dual();
  const int dist = build_gsp(ed).length;
  const int delta = inst.graph.max_degree();
  json algos = json::object(), inv = json::object();
  std::optional<int> deg5_len, approx_len, fpt_len, optimum;
  std::optional<bool> twosat;
  bool others_consistent = true;

  auto attempt = [&](const std::string& name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      json r = body();
      r["elapsed_ms"] = ms_since(start);
      if (name != "bfs" && r.contains("consistent") && !r["consistent"].get<bool>()) others_consistent = false;
      algos[name] = r;
    } catch (const PreconditionError& e) {
      algos[name] = {{"skipped", e.what()}};
    }
  };

  attempt("bfs", [&] { return path_report(ed, bfs_shortest(ed)); });
  attempt("deg5", [&] {
    const DualPath p = reroute_degree5(ed);
    deg5_len = p.length();
    return path_report(ed, p);
  });
  attempt("approx", [&] {
    const DualPath p = approx_delta(ed);
    approx_len = p.length();
    return path_report(ed, p);
  });
  attempt("oracle", [&] {
    const auto r = testkit::oracle_shortest_consistent(ed, oracle_bound(opt, ed));
    json j = {{"conclusive", r.conclusive()}};
    if (r.witness) {
      optimum = r.witness->length();
      merge(j, path_report(ed, *r.witness));
    }
    return j;
  });
  attempt("2sat", [&] {
    const Decision d = decide(ed);
    twosat = d.yes;
    json j = {{"decision", d.yes ? "yes" : "no"}, {"partner_route", partner_route(ed)}};
    if (d.yes) merge(j, path_report(ed, *d.path));
    return j;
  });
  attempt("fpt", [&] {
    RunOptions fo = opt;
    fo.k = optimum.value_or(0);
    fo.auto_k = !optimum;
    json j;
    run_fpt(fo, ed, dist, j);
    if (j.contains("length")) fpt_len = j["length"].get<int>();
    return j;
  });

  if (deg5_len) inv["deg5_length_equals_bfs"] = *deg5_len == dist;
  if (approx_len) inv["approx_within_ratio"] = *approx_len <= std::max(1, delta - 2) * dist;
  if (fpt_len && optimum) inv["fpt_at_least_oracle"] = *fpt_len >= *optimum;
  if (twosat && optimum) inv["2sat_matches_oracle"] = *twosat == (*optimum == dist);
  if (twosat && algos["2sat"]["partner_route"].contains("yes")) {
    inv["partner_route_agrees"] = algos["2sat"]["partner_route"]["yes"].get<bool>() == *twosat;
  }
  inv["non_bfs_paths_consistent"] = others_consistent;
  bool ok = true;
  for (auto it = inv.begin(); it != inv.end(); ++it) ok = ok && it.value().get<bool>();
  out = {{"instance", inst.name}, {"dist", dist},    {"max_degree", delta}, {"seed", opt.seed},
         {"algorithms", algos},   {"invariants", inv}, {"ok", ok}};
  return ok ? kOk : kInternal;
}

int cmd_export(const std::string& file, const std::string& what, const std::string& dir, json& out) {
  const Instance inst = load(file);
  const ExtendedDual ed = inst.dual();
  fs::create_directories(dir);
  out = {{"instance", inst.name}, {"what", what}, {"dir", dir}};
  if (what == "dual") {
    write_text(fs::path(dir) / "dual.dot", dual_to_dot(ed));
    out["files"] = {"dual.dot"};
  } else if (what == "gsp") {
    const ShortestPathDag dag = build_gsp(ed);
    write_text(fs::path(dir) / "gsp.dot", gsp_to_dot(ed, dag));
    json edges = json::array();
    for (const DagEdge& e : dag.edges) edges.push_back({{"edge", e.edge}, {"from", e.from}, {"to", e.to}});
    write_text(fs::path(dir) / "gsp.json", json({{"dist", dag.length}, {"edges", edges}}).dump(2) + "\n");
    out["files"] = {"gsp.dot", "gsp.json"};
    out["dist"] = dag.length;
  } else if (what == "pipeline") {
    merge(out, dump_pipeline(ed, dir));
  } else {
    throw InputError("unknown export target '" + what + "'");
  }
  return kOk;
}

int cmd_gen(const GenOptions& opt, json& out) {
  Instance inst;
  try {
    if (opt.family == "fig2") inst = testkit::gen_fig2(opt.m);
    else if (opt.family == "random") inst = testkit::gen_random_planar(opt.n, opt.delta_max, opt.seed);
    else if (opt.family == "geometric") inst = testkit::gen_random_geometric(opt.n, opt.delta_max, opt.seed);
    else if (opt.family == "glued") inst = testkit::gen_glued_blocks(opt.blocks, opt.delta_max, opt.seed);
    else if (opt.family == "fig2-edits") inst = testkit::perturb(testkit::gen_fig2(opt.m), opt.edits, 6, opt.seed);
    else throw InputError("unknown family '" + opt.family + "'");
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::ostringstream text;
  write_instance(text, inst);
  out = {{"family", opt.family}, {"name", inst.name}, {"vertices", inst.graph.vertex_count()},
         {"edges", inst.graph.edge_count()}, {"max_degree", inst.graph.max_degree()}};
  if (opt.out.empty()) {
    out["instance"] = text.str();
  } else {
    write_text(opt.out, text.str());
    out["file"] = opt.out;
  }
  return kOk;
}

int cmd_corpus(const std::string& dir, int seeds, json& out) {
  fs::create_directories(dir);
  const std::vector<Instance> corpus = testkit::standard_corpus(seeds);
  json entries = json::array();
  for (const Instance& inst : corpus) {
    const std::string file = inst.name + ".txt";
    std::ostringstream text;
    write_instance(text, inst);
    write_text(fs::path(dir) / file, text.str());
    const ExtendedDual ed = inst.dual();
    const ShortestPathDag dag = build_gsp(ed);
    const auto r = testkit::oracle_shortest_consistent(ed);
    json e = {{"name", inst.name},
              {"file", file},
              {"vertices", inst.graph.vertex_count()},
              {"edges", inst.graph.edge_count()},
              {"max_degree", inst.graph.max_degree()},
              {"dist", dag.length},
              {"oracle_bound", r.search_bound},
              {"common_face", check_common_face(ed, dag).found}};
    e["oracle_optimum"] = r.optimum_length ? json(*r.optimum_length) : json(nullptr);
    entries.push_back(e);
  }
  const json manifest = {{"generator_seeds", seeds}, {"instances", entries}};
  write_text(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");
  out = {{"dir", dir}, {"instances", entries.size()}, {"manifest", "manifest.json"}};
  return kOk;
}

}  // namespace geoinsert::cli
