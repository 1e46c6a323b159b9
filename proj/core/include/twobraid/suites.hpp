#ifndef TWOBRAID_SUITES_HPP
#define TWOBRAID_SUITES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "twobraid/report.hpp"

namespace twobraid {

struct UnknownSuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The named verification suites, in canonical order (without "all").
const std::vector<std::string>& suite_names();

// Runs one suite (or "all", which concatenates every suite with check ids
// prefixed by "<suite>/"). Checks are pure computations appended in a fixed
// declared order; identical config + seed give an identical report. Throws
// UnknownSuiteError, ModelError (model file problems), and ResourceCapError
// (span-oracle cap) to the caller.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace twobraid

#endif
