#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Base of every typed computation error. `name()` is the stable identifier
/// printed by the CLI (e.g. "NotHyperbolic").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ZETALAB_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                        \
   public:                                                           \
    explicit Type(const std::string& what) : Error(#Type, what) {}   \
  }

ZETALAB_DEFINE_ERROR(PreconditionError);
ZETALAB_DEFINE_ERROR(NotHyperbolic);
ZETALAB_DEFINE_ERROR(ConstructionFailed);
ZETALAB_DEFINE_ERROR(TrivialWord);
ZETALAB_DEFINE_ERROR(PrecisionExhausted);
ZETALAB_DEFINE_ERROR(BudgetExceeded);
ZETALAB_DEFINE_ERROR(CutoffExceeded);
ZETALAB_DEFINE_ERROR(FormatError);
ZETALAB_DEFINE_ERROR(DigestMismatch);
ZETALAB_DEFINE_ERROR(DisksOverlap);
ZETALAB_DEFINE_ERROR(NonDecayingTail);
ZETALAB_DEFINE_ERROR(PoleAtPoint);
ZETALAB_DEFINE_ERROR(ZeroOnContour);
ZETALAB_DEFINE_ERROR(UnwrapFailure);
ZETALAB_DEFINE_ERROR(InconsistentOrder);
ZETALAB_DEFINE_ERROR(UnsupportedGenus);
ZETALAB_DEFINE_ERROR(NotRealizable);
ZETALAB_DEFINE_ERROR(UsageError);

#undef ZETALAB_DEFINE_ERROR

}  // namespace zetalab
