#pragma once

#include <stdexcept>
#include <string>

namespace oigb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define OIGB_DEFINE_ERROR(Name) \
  struct Name : Error {         \
    using Error::Error;         \
  }

OIGB_DEFINE_ERROR(DivisionByZero);
OIGB_DEFINE_ERROR(NonPrimeModulus);
OIGB_DEFINE_ERROR(FieldMismatch);
OIGB_DEFINE_ERROR(WidthMismatch);
OIGB_DEFINE_ERROR(EmptySource);
OIGB_DEFINE_ERROR(SchemeMismatch);
OIGB_DEFINE_ERROR(SignatureMismatch);
OIGB_DEFINE_ERROR(ParameterMismatch);
OIGB_DEFINE_ERROR(ZeroInput);
OIGB_DEFINE_ERROR(NonHomogeneous);
OIGB_DEFINE_ERROR(UncertifiedWidth);
OIGB_DEFINE_ERROR(InsufficientData);
OIGB_DEFINE_ERROR(WidthTooLarge);
OIGB_DEFINE_ERROR(ParseError);
OIGB_DEFINE_ERROR(OrderAxiomViolation);
OIGB_DEFINE_ERROR(UnsupportedInput);

#undef OIGB_DEFINE_ERROR

}  // namespace oigb
