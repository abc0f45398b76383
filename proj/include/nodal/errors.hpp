#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Base of every error thrown by the library. `kind()` is the stable name used in CLI reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define NODAL_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

NODAL_DEFINE_ERROR(MalformedInput)
NODAL_DEFINE_ERROR(MalformedEmbedding)
NODAL_DEFINE_ERROR(InvalidType)
NODAL_DEFINE_ERROR(InconsistentLabeling)
NODAL_DEFINE_ERROR(CapExceeded)
NODAL_DEFINE_ERROR(NoRepeat)
NODAL_DEFINE_ERROR(DegenerateGrid)
NODAL_DEFINE_ERROR(NoConvergence)
NODAL_DEFINE_ERROR(AllZeroField)
NODAL_DEFINE_ERROR(NoFit)
NODAL_DEFINE_ERROR(InfeasibleOrder)
NODAL_DEFINE_ERROR(UnknownFamily)

#undef NODAL_DEFINE_ERROR

} // namespace nodal
