#ifndef UDW_ERRORS_HPP
#define UDW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace udw {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDecay : std::invalid_argument {
  explicit InvalidDecay(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an evaluation point coincides with a branch boundary of the
// pole structure; callers split their integration panels there instead.
struct BranchBoundary : std::runtime_error {
  explicit BranchBoundary(const std::string& what) : std::runtime_error(what) {}
};

struct WrongScenario : std::invalid_argument {
  explicit WrongScenario(const std::string& what) : std::invalid_argument(what) {}
};

struct ConditionNotMet : std::runtime_error {
  explicit ConditionNotMet(const std::string& what) : std::runtime_error(what) {}
};

struct DeltaScenario : std::invalid_argument {
  explicit DeltaScenario(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateSamples : std::invalid_argument {
  explicit DegenerateSamples(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidState : std::runtime_error {
  explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace udw

#endif
