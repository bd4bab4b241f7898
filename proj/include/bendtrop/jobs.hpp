#ifndef BENDTROP_JOBS_HPP
#define BENDTROP_JOBS_HPP

#include "bendtrop/congruence.hpp"

#include <string>

namespace bendtrop {

// Exit codes shared by the library job runner and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnknown = 2;  // budget exhausted or resource cap hit

struct JobOutcome {
    int exit_code = kExitOk;
    std::string report;  // JSON text, newline-terminated, byte-stable
};

// Dispatches one job: parses the JSON job description, runs the requested
// operation, and renders the report. Never throws; schema and usage problems
// come back as exit_code 1 with an "error" report.
// Commands: trop, member, univ, valcheck, pi, limit, derive, axioms.
JobOutcome run_job(const std::string& command, const std::string& job_text,
                   const SearchBudget& budget, int threads = 1);

}  // namespace bendtrop

#endif
