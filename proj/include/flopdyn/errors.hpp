#pragma once

#include <stdexcept>
#include <string>

namespace flopdyn {

// Every typed failure carries a stable name; the CLI prints it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define FLOPDYN_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  };

// Input-shape errors (exit code 2 at the CLI).
FLOPDYN_DEFINE_ERROR(DimensionError)
FLOPDYN_DEFINE_ERROR(IndexError)
FLOPDYN_DEFINE_ERROR(ParseError)
FLOPDYN_DEFINE_ERROR(ConfigError)

// Mathematical-hypothesis violations (exit code 3 at the CLI).
FLOPDYN_DEFINE_ERROR(IrrationalSpectrumError)
FLOPDYN_DEFINE_ERROR(SingularResolventError)
FLOPDYN_DEFINE_ERROR(NotEigenvectorError)
FLOPDYN_DEFINE_ERROR(OrbitMismatchError)
FLOPDYN_DEFINE_ERROR(InvalidSigmaError)
FLOPDYN_DEFINE_ERROR(InvalidIntersectionError)
FLOPDYN_DEFINE_ERROR(HypothesisViolationError)
FLOPDYN_DEFINE_ERROR(NoDominantEigenvalueError)

#undef FLOPDYN_DEFINE_ERROR

}  // namespace flopdyn
