#ifndef HULLCRAFT_ERRORS_HPP
#define HULLCRAFT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hullcraft {

/// Base for all domain errors thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HULLCRAFT_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}    \
    }

HULLCRAFT_DEFINE_ERROR(NotPrime);
HULLCRAFT_DEFINE_ERROR(SizeExceeded);
HULLCRAFT_DEFINE_ERROR(DivisionByZero);
HULLCRAFT_DEFINE_ERROR(NotADivisor);
HULLCRAFT_DEFINE_ERROR(DimensionMismatch);
HULLCRAFT_DEFINE_ERROR(ZeroScalar);
HULLCRAFT_DEFINE_ERROR(DuplicatePoint);
HULLCRAFT_DEFINE_ERROR(BadDimension);
HULLCRAFT_DEFINE_ERROR(CosetCollision);
HULLCRAFT_DEFINE_ERROR(BadSpec);
HULLCRAFT_DEFINE_ERROR(TargetTooLarge);
HULLCRAFT_DEFINE_ERROR(UnsupportedField);
HULLCRAFT_DEFINE_ERROR(ReductionFailed);
HULLCRAFT_DEFINE_ERROR(NonOrthonormalizable);
HULLCRAFT_DEFINE_ERROR(BadLevel);
HULLCRAFT_DEFINE_ERROR(BadRange);
HULLCRAFT_DEFINE_ERROR(ParseError);

#undef HULLCRAFT_DEFINE_ERROR

/// Thrown when an exhaustive computation would need more work units than allowed.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : Error("BudgetExceeded: requires " + std::to_string(required) +
                " work units, budget " + std::to_string(budget)),
          required(required), budget(budget) {}
    std::uint64_t required;
    std::uint64_t budget;
};

} // namespace hullcraft

#endif
