#ifndef GENUS3_ERROR_HPP
#define GENUS3_ERROR_HPP

#include <stdexcept>
#include <string>

namespace genus3 {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/* Errors caused by bad caller input. The CLI maps these to exit code 2. */
class InputError : public Error
{
  public:
    using Error::Error;
};

/* A postcondition or internal consistency check failed (exit code 1). */
class InvariantViolation : public Error
{
  public:
    using Error::Error;
};

#define GENUS3_INPUT_ERROR(Name)                                              \
    class Name : public InputError                                            \
    {                                                                         \
      public:                                                                 \
        using InputError::InputError;                                         \
    }

GENUS3_INPUT_ERROR(NotAPrimePower);
GENUS3_INPUT_ERROR(ReducibleModulus);
GENUS3_INPUT_ERROR(DivisionByZero);
GENUS3_INPUT_ERROR(FieldTooLarge);
GENUS3_INPUT_ERROR(PerfectSquareInput);
GENUS3_INPUT_ERROR(RootOutOfWeilRange);
GENUS3_INPUT_ERROR(MixedDiscriminants);
GENUS3_INPUT_ERROR(InvalidDiscriminant);
GENUS3_INPUT_ERROR(NotPositiveDefinite);
GENUS3_INPUT_ERROR(IncompleteForDiscriminant);
GENUS3_INPUT_ERROR(UnsupportedCase);
GENUS3_INPUT_ERROR(ModelError);
GENUS3_INPUT_ERROR(SingularCurve);
GENUS3_INPUT_ERROR(NonIntegralSolution);
GENUS3_INPUT_ERROR(EvenPrime);
GENUS3_INPUT_ERROR(WrongFamily);
GENUS3_INPUT_ERROR(ParseError);

#undef GENUS3_INPUT_ERROR

} // namespace genus3

#endif
