#ifndef NOVBOTT_CLI_HPP
#define NOVBOTT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "novbott/rank.hpp"

namespace novbott::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;            // computation finished, certificates hold
inline constexpr int kExitNegative = 1;      // a checked certificate failed
inline constexpr int kExitMalformed = 2;     // bad document, flag, or argument
inline constexpr int kExitInconclusive = 3;  // separation or truncation window too small

struct RunConfig {
    std::uint64_t seed = 0;
    RankStrategy strategy = RankStrategy::randomized;
    std::uint64_t prime = 2147483647ULL;
    std::size_t trials = 3;
    double epsilon = 1e-8;   // numeric kernel threshold
    std::size_t order = 0;   // page bound for `ss`; 0 = the family order
    std::string format = "table";  // table | json-like | csv
    std::string out_path;          // empty = stdout
};

RankOptions rank_options(const RunConfig& cfg);

// Full command-line entry point; parses argv, runs one subcommand, writes
// the payload to `out` (or the --out file) and diagnostics to `err`.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace novbott::cli

#endif
