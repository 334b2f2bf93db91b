#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json_out.hpp"

namespace geoinsert::cli {

enum ExitCode { kOk = 0, kNo = 1, kPrecondition = 2, kInput = 3, kInternal = 4 };

/// Bad command-line values or unreadable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string file;
  std::string algo = "bfs";
  int k = 0;  // 0: dist(s, t)
  double delta = 0.05;
  std::uint64_t seed = 1;
  int bound = 0;  // 0: default oracle bound
  bool auto_k = false;
  int threads = 1;
  std::string dump_dir;
};

struct GenOptions {
  std::string family = "random";
  int m = 1;
  int n = 12;
  int delta_max = 5;
  int blocks = 3;
  int edits = 3;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_validate(const std::string& file, json& out);
int cmd_run(const RunOptions& opt, json& out);
int cmd_compare(const RunOptions& opt, json& out);
int cmd_export(const std::string& file, const std::string& what, const std::string& dir, json& out);
int cmd_gen(const GenOptions& opt, json& out);
int cmd_corpus(const std::string& dir, int seeds, json& out);

}  // namespace geoinsert::cli
