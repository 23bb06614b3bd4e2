#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rabin {

// Base of all math-domain failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text-level failures (polynomial grammar, variable names).  Kept on a
// separate branch so callers can map them to a different exit status.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
};

struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct UnknownVariable : ParseError {
    using ParseError::ParseError;
};
struct ExponentOverflow : Error {
    using Error::Error;
};

#define RABIN_DEFINE_ERROR(NAME)                      \
    struct NAME : Error {                             \
        using Error::Error;                           \
    }

RABIN_DEFINE_ERROR(NotPrime);
RABIN_DEFINE_ERROR(ModulusMismatch);
RABIN_DEFINE_ERROR(ArityMismatch);
RABIN_DEFINE_ERROR(DivisionByZero);
RABIN_DEFINE_ERROR(BothZero);
RABIN_DEFINE_ERROR(ZeroPolynomial);
RABIN_DEFINE_ERROR(ZeroDivisor);
RABIN_DEFINE_ERROR(ConstantModulus);
RABIN_DEFINE_ERROR(NotMonic);
RABIN_DEFINE_ERROR(DuplicateAbscissa);
RABIN_DEFINE_ERROR(VarOutOfRange);
RABIN_DEFINE_ERROR(BothConstantInVar);
RABIN_DEFINE_ERROR(DimensionTooLarge);
RABIN_DEFINE_ERROR(FieldTooSmall);
RABIN_DEFINE_ERROR(DegenerateSpecialization);
RABIN_DEFINE_ERROR(EmptySystem);
RABIN_DEFINE_ERROR(ConfigOutOfRange);
RABIN_DEFINE_ERROR(ConditionViolated);
RABIN_DEFINE_ERROR(BadPrime);
RABIN_DEFINE_ERROR(NotCoprime);
RABIN_DEFINE_ERROR(PreconditionGcd);
RABIN_DEFINE_ERROR(NotDivisor);
RABIN_DEFINE_ERROR(EnumerationTooLarge);
RABIN_DEFINE_ERROR(BudgetExhausted);

#undef RABIN_DEFINE_ERROR

}  // namespace rabin
