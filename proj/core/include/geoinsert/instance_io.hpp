#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "geoinsert/testkit.hpp"

namespace geoinsert {

/// Malformed instance text; `line` is 1-based, 0 when the file ended early.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads
///
///   n m
///   v: u1 u2 ... uk     (n lines, counterclockwise rotation of v)
///   s t
///
/// Blank lines and `#` comments are skipped. The rotation system is checked
/// for symmetry and the edge count against m; planarity is left to
/// validate_embedding.
Instance parse_instance(std::istream& in, std::string name = {});
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

}  // namespace geoinsert
