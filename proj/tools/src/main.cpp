#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "geoinsert/instance_io.hpp"

using namespace geoinsert;
using namespace geoinsert::cli;

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "geoinsert: " << message << "\n";
  std::cout << json({{"error", kind}, {"message", message}, {"exit_code", code}}).dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight-line edge insertion into plane graphs"};
  app.require_subcommand(1);

  std::string file, what, dir;
  RunOptions run;
  GenOptions gen;
  int seeds = 3;

  auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
  validate->add_option("instance", file, "Instance file ('-' for stdin)")->required();

  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("instance", run.file, "Instance file ('-' for stdin)")->required();
    sub->add_option("--k", run.k, "Target length for fpt (default dist)");
    sub->add_option("--delta", run.delta, "Failure probability for fpt");
    sub->add_option("--seed", run.seed, "Random seed")->capture_default_str();
    sub->add_option("--bound", run.bound, "Oracle length bound (default 3*dist+6)");
    sub->add_flag("--auto-k", run.auto_k, "fpt: raise k until a path is found");
    sub->add_option("--threads", run.threads, "fpt worker threads");
  };
  auto* runc = app.add_subcommand("run", "Run one algorithm");
  add_run_options(runc);
  runc->add_option("--algo", run.algo, "Algorithm")
      ->check(CLI::IsMember({"bfs", "deg5", "approx", "2sat", "fpt", "oracle"}))
      ->capture_default_str();
  runc->add_option("--dump-pipeline", run.dump_dir, "2sat: write the graph after each normalization pass");

  auto* compare = app.add_subcommand("compare", "Run every applicable algorithm and check them against each other");
  add_run_options(compare);

  auto* exportc = app.add_subcommand("export", "Write DOT/JSON diagnostics");
  exportc->add_option("instance", file, "Instance file ('-' for stdin)")->required();
  exportc->add_option("--what", what, "dual, gsp or pipeline")
      ->required()
      ->check(CLI::IsMember({"dual", "gsp", "pipeline"}));
  exportc->add_option("--out", dir, "Output directory")->required();

  auto* genc = app.add_subcommand("gen", "Generate an instance");
  genc->add_option("--family", gen.family, "Instance family")
      ->check(CLI::IsMember({"fig2", "random", "geometric", "glued", "fig2-edits"}))
      ->capture_default_str();
  genc->add_option("--m", gen.m, "fig2 member")->capture_default_str();
  genc->add_option("--n", gen.n, "Vertex count")->capture_default_str();
  genc->add_option("--delta-max", gen.delta_max, "Maximum degree")->capture_default_str();
  genc->add_option("--blocks", gen.blocks, "glued: number of blocks")->capture_default_str();
  genc->add_option("--edits", gen.edits, "fig2-edits: local edits applied to member m")->capture_default_str();
  genc->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  genc->add_option("--out", gen.out, "Instance file to write (default: embed in the JSON output)");

  auto* corpus = app.add_subcommand("corpus", "Regenerate the instance corpus and its manifest");
  corpus->add_option("--out", dir, "Output directory")->required();
  corpus->add_option("--seeds", seeds, "Seeds per (family, n, degree)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInput, "usage", e.what());
  }

  json out;
  int code = kOk;
  try {
    if (*validate) code = cmd_validate(file, out);
    else if (*runc) code = cmd_run(run, out);
    else if (*compare) code = cmd_compare(run, out);
    else if (*exportc) code = cmd_export(file, what, dir, out);
    else if (*genc) code = cmd_gen(gen, out);
    else if (*corpus) code = cmd_corpus(dir, seeds, out);
  } catch (const PreconditionError& e) {
    return fail(kPrecondition, "precondition", e.what());
  } catch (const ParseError& e) {
    return fail(kInput, "parse", e.what());
  } catch (const InvalidEmbedding& e) {
    return fail(kInput, "invalid_embedding", e.what());
  } catch (const StructuralError& e) {
    return fail(kInput, "structure", e.what());
  } catch (const InputError& e) {
    return fail(kInput, "input", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kInput, "io", e.what());
  } catch (const InternalError& e) {
    return fail(kInternal, "internal", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal", e.what());
  }
  std::cout << out.dump(2) << "\n";
  return code;
}
