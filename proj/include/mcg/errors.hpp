#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Closure or search grew past its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroup : std::invalid_argument {
  explicit NotASubgroup(const std::string& what) : std::invalid_argument(what) {}
};

struct NotCentralInvolution : std::invalid_argument {
  explicit NotCentralInvolution(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidName : std::invalid_argument {
  explicit InvalidName(const std::string& what) : std::invalid_argument(what) {}
};

// Coset enumeration did not close within the allowed number of cosets.
struct CosetLimitExceeded : std::runtime_error {
  explicit CosetLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteTable : std::runtime_error {
  explicit IncompleteTable(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct InfeasibleDescriptor : std::invalid_argument {
  explicit InfeasibleDescriptor(const std::string& what) : std::invalid_argument(what) {}
};

struct MismatchedR : std::invalid_argument {
  explicit MismatchedR(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAdmissible : std::invalid_argument {
  explicit NotAdmissible(const std::string& what) : std::invalid_argument(what) {}
};

struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcg
