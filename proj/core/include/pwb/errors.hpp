#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwb {

// Base of every failure raised by the library. kind() is the stable name used
// in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define PWB_ERROR(Name)                                                              \
  class Name : public Error {                                                        \
   public:                                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}                   \
  }

PWB_ERROR(ZeroElement);
PWB_ERROR(DivisorZero);
PWB_ERROR(UnknownVariable);
PWB_ERROR(SingularMatrix);
PWB_ERROR(ExponentOverflow);
PWB_ERROR(DegreeBudgetExceeded);
PWB_ERROR(JacobiFailure);
PWB_ERROR(NotQuadratic);
PWB_ERROR(NotMonomial);
PWB_ERROR(NotSplittable);
PWB_ERROR(NotSkew);
PWB_ERROR(ZeroPotential);
PWB_ERROR(LieJacobiFails);
PWB_ERROR(NotAutomorphism);
PWB_ERROR(NotReflection);
PWB_ERROR(BoundExceeded);
PWB_ERROR(Inconclusive);
PWB_ERROR(InducedBracketNotClosed);
PWB_ERROR(DegreeBoundTooSmall);
PWB_ERROR(CapExceeded);
PWB_ERROR(InvalidArgument);
PWB_ERROR(FormatError);

#undef PWB_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pwb
