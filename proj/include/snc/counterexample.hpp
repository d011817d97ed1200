#pragma once

#include <string>

#include "json.hpp"
#include "snc/digraph.hpp"
#include "snc/error.hpp"

namespace snc {

/// Full state captured when a step that must succeed by theory did not.
/// Replayable: the instance is embedded verbatim.
struct CounterexampleReport {
  std::string stage;
  std::string message;
  Digraph digraph;
  WeightMap weights;
  nlohmann::json state = nlohmann::json::object();
};

class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(
      CounterexampleReport report,
      ErrorCode code = ErrorCode::InternalTheoremViolation)
      : Error(code, report.stage + ": " + report.message),
        report_(std::move(report)) {}

  const CounterexampleReport& report() const noexcept { return report_; }

 private:
  CounterexampleReport report_;
};

}  // namespace snc
