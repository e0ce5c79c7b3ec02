#pragma once

#include <stdexcept>
#include <string>

namespace lmkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LMKIT_DEFINE_ERROR(NAME)   \
  class NAME : public Error {      \
   public:                         \
    using Error::Error;            \
  }

LMKIT_DEFINE_ERROR(CycleError);
LMKIT_DEFINE_ERROR(UnknownElement);
LMKIT_DEFINE_ERROR(InvalidInput);
LMKIT_DEFINE_ERROR(NotALattice);
LMKIT_DEFINE_ERROR(NotDistributive);
LMKIT_DEFINE_ERROR(InvalidN);
LMKIT_DEFINE_ERROR(ArityMismatch);
LMKIT_DEFINE_ERROR(L6EquivalenceFailure);
LMKIT_DEFINE_ERROR(RoundTripFailure);
LMKIT_DEFINE_ERROR(NotAHomomorphism);
LMKIT_DEFINE_ERROR(NotSemimodal);
LMKIT_DEFINE_ERROR(ComplementNotSemimodal);
LMKIT_DEFINE_ERROR(NotAFilter);
LMKIT_DEFINE_ERROR(AlgebraMismatch);
LMKIT_DEFINE_ERROR(NotBoolean);
LMKIT_DEFINE_ERROR(ParseError);
LMKIT_DEFINE_ERROR(ValidationError);

#undef LMKIT_DEFINE_ERROR

/// A broken invariant that valid inputs can never trigger.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lmkit
