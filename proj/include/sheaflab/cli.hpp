#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sheaflab {

struct CliConfig {
  std::string field = "101";
  std::uint64_t seed = 42;
  std::size_t samples = 64;
  std::string range = "-6..4";
  bool exhaustive = false;
  std::string in;
  std::string out;
  std::string item;
  int twist = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a..b" with a <= b.
std::pair<int, int> parse_range(const std::string& text);

// Exit codes: 0 success, 1 failed claim or unexpected negative, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheaflab
