#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legsat/dga.hpp"

// Line-oriented derivation scripts over a graded DGA:
//
//   let <name> = <poly>
//   assert d <name> = <poly>          # <name> a generator or a let-binding
//   auto <gen> -> <unit> <gen> + <poly>   # unit: 1, -1, t^k, -t^k
//   stab <degree> <e1> <e2>
//   destab <e1> <e2>
//   assert equal final                # compare against the supplied DGA
//   assert d2zero
//
// Every assert is machine-checked; failures abort with the step index and
// both polynomials.

namespace legsat {

struct ScriptResult {
  GradedDga dga;
  std::vector<std::string> log;
  bool ok = true;
  int failed_step = -1;
  std::string failure;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::string msg, int step)
      : std::runtime_error(std::move(msg)), step(step) {}
  int step;
};

// Runs the script; `final` is the comparison target for `assert equal final`.
// With stop_on_failure=false a failed assert is reported in the result
// instead of thrown.
ScriptResult run_script(const GradedDga& A, const std::string& script,
                        const GradedDga* final = nullptr,
                        bool stop_on_failure = true);

}  // namespace legsat
