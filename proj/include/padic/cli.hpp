#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "padic/report.hpp"

namespace padic::cli {

// Exit codes: 0 success, 2 invalid input, 3 table/oracle mismatch under
// --strict, 4 internal precision exhaustion.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kMismatch = 3;
inline constexpr int kPrecisionExhausted = 4;

// Run one command (argv-style, without the program name).  All regular
// output goes to `out`, diagnostics to `err`.  Deterministic: identical
// arguments (and seed) produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Stratified table validation, exposed for the acceptance suite.
struct ValidationRun {
    int samples = 0;
    std::vector<report::DiscrepancyRecord> records;
};

ValidationRun validate_table(const Prime& p, const std::string& table, int samples,
                             std::uint64_t seed, cubic::D0Mode mode, int digits);

}  // namespace padic::cli
