#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsheaf {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kAmbiguous = 2;
inline constexpr int kParse = 3;
inline constexpr int kInconsistent = 4;
}  // namespace exit_code

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Fixed regression suite behind `verify-paper`; randomized items draw from `seed`.
std::vector<SuiteItem> verify_paper(std::uint64_t seed);

/// Entry point of the command-line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qsheaf
