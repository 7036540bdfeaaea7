#pragma once

#include <stdexcept>
#include <string>

namespace phax {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define PHAX_ERROR(Name)                                                      \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}       \
  }

PHAX_ERROR(MonotonicityViolation);
PHAX_ERROR(MissingFace);
PHAX_ERROR(UnknownVertex);
PHAX_ERROR(InvalidPair);
PHAX_ERROR(InvalidInterval);
PHAX_ERROR(NotFiltrationPreserving);
PHAX_ERROR(SubNotMappedIntoSub);
PHAX_ERROR(DimensionMismatch);
PHAX_ERROR(SubspaceNotContained);
PHAX_ERROR(ClassNotInTarget);
PHAX_ERROR(NotRepresentableAtLowerEndpoint);
PHAX_ERROR(VertexNotPresent);
PHAX_ERROR(NotProperTriad);
PHAX_ERROR(NotARetraction);
PHAX_ERROR(HypothesisViolated);
PHAX_ERROR(MalformedInstance);
PHAX_ERROR(OracleMismatch);
PHAX_ERROR(ParseError);

#undef PHAX_ERROR

} // namespace phax
