#pragma once

// Helpers shared by the command implementations.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mphide/exact.hpp"

namespace mphide::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string workspace;  // base for relative paths; empty means the cwd

  std::filesystem::path resolve(const std::string& path) const;
  std::string read(const std::string& path) const;
  void write(const std::string& path, const std::string& content) const;
};

// "a,b,c" -> integers. ParseError on empty items or bad digits.
std::vector<BigInteger> parse_integer_list(const std::string& text);

// Key exchange output is always prefixed with this banner.
void print_disclaimer(std::ostream& out);

}  // namespace mphide::cli
