#pragma once

#include <stdexcept>
#include <string>

namespace hconf {

// Domain errors. Each maps to a stable name used by the CLI (exit code 1).
struct DomainError : std::runtime_error {
  std::string kind;
  DomainError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define HCONF_ERROR(Name)                                   \
  struct Name : DomainError {                               \
    explicit Name(const std::string& msg = "")              \
        : DomainError(#Name, msg) {}                        \
  }

HCONF_ERROR(MixedSignature);
HCONF_ERROR(OutOfRange);
HCONF_ERROR(EmptySet);
HCONF_ERROR(MissingFullStructure);
HCONF_ERROR(NotASubgroupOfStabilizer);
HCONF_ERROR(LevelCapExceeded);
HCONF_ERROR(ClassificationIncomplete);
HCONF_ERROR(VerificationMismatch);
HCONF_ERROR(NotASubEnrichment);
HCONF_ERROR(NonUnitLeadingCoefficient);
HCONF_ERROR(ResourceBudgetExceeded);
HCONF_ERROR(InconsistentSyzygy);
HCONF_ERROR(NotZeroDimensional);
HCONF_ERROR(ParseError);

#undef HCONF_ERROR

}  // namespace hconf
