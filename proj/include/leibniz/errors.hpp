#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LEIBNIZ_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    };

LEIBNIZ_DEFINE_ERROR(ShapeError)
LEIBNIZ_DEFINE_ERROR(SingularError)
LEIBNIZ_DEFINE_ERROR(ParseError)
LEIBNIZ_DEFINE_ERROR(NotClosedError)
LEIBNIZ_DEFINE_ERROR(DimensionError)
LEIBNIZ_DEFINE_ERROR(ParamError)
LEIBNIZ_DEFINE_ERROR(NotInFamilyError)
LEIBNIZ_DEFINE_ERROR(NotDerivationError)
LEIBNIZ_DEFINE_ERROR(NotNilpotentError)
LEIBNIZ_DEFINE_ERROR(InconsistencyError)
LEIBNIZ_DEFINE_ERROR(ResidualError)
LEIBNIZ_DEFINE_ERROR(MissingVariableError)
LEIBNIZ_DEFINE_ERROR(UnsupportedError)

#undef LEIBNIZ_DEFINE_ERROR

} // namespace leibniz
