#ifndef TROPINV_ERRORS_HPP
#define TROPINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropinv {

// All recoverable failures carry a stable name (reported verbatim by the CLI)
// and a category that maps onto the CLI exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind { parse, precondition, internal };

    Error(std::string name, Kind kind, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)), kind_(kind) {}

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }

private:
    std::string name_;
    Kind kind_;
};

#define TROPINV_DEFINE_ERROR(NAME, KIND)                                    \
    struct NAME : Error {                                                   \
        explicit NAME(const std::string& message)                           \
            : Error(#NAME, Error::Kind::KIND, message) {}                   \
    }

TROPINV_DEFINE_ERROR(EmptyGenerators, precondition);
TROPINV_DEFINE_ERROR(InvalidExponent, precondition);
TROPINV_DEFINE_ERROR(InvalidDirection, precondition);
TROPINV_DEFINE_ERROR(DimensionMismatch, precondition);
TROPINV_DEFINE_ERROR(ZeroPoint, precondition);
TROPINV_DEFINE_ERROR(NotAWeight, precondition);
TROPINV_DEFINE_ERROR(NotConvenient, precondition);
TROPINV_DEFINE_ERROR(NonConvenientArgument, precondition);
TROPINV_DEFINE_ERROR(NoStabilization, internal);
TROPINV_DEFINE_ERROR(NotAZero, precondition);
TROPINV_DEFINE_ERROR(ParseError, parse);
TROPINV_DEFINE_ERROR(VariableOutOfRange, parse);
TROPINV_DEFINE_ERROR(ZeroPolynomial, parse);
TROPINV_DEFINE_ERROR(EmptyShell, precondition);
TROPINV_DEFINE_ERROR(TooFewPoints, precondition);
TROPINV_DEFINE_ERROR(InternalError, internal);

#undef TROPINV_DEFINE_ERROR

} // namespace tropinv

#endif
