#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class of every error raised by the library. `kind()` carries the
/// stable error name that the CLI surfaces to users.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind))
    {
    }

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CYCLO_DEFINE_ERROR(Name)                                                      \
    class Name : public Error {                                                       \
    public:                                                                           \
        explicit Name(const std::string& message) : Error(#Name, message) {}          \
    }

CYCLO_DEFINE_ERROR(InvalidArgument);
CYCLO_DEFINE_ERROR(RejectedModulus);
CYCLO_DEFINE_ERROR(NoDefaultPolynomial);
CYCLO_DEFINE_ERROR(OrderUnavailable);
CYCLO_DEFINE_ERROR(InvalidSubfield);
CYCLO_DEFINE_ERROR(NotCoprime);
CYCLO_DEFINE_ERROR(ZeroPolynomial);
CYCLO_DEFINE_ERROR(CoefficientLeak);
CYCLO_DEFINE_ERROR(NotCosetClosed);
CYCLO_DEFINE_ERROR(ImproperCode);
CYCLO_DEFINE_ERROR(RootMismatch);
CYCLO_DEFINE_ERROR(BudgetExceeded);
CYCLO_DEFINE_ERROR(NotRational);
CYCLO_DEFINE_ERROR(NotIrreducible);
CYCLO_DEFINE_ERROR(UnknownTable);

#undef CYCLO_DEFINE_ERROR

} // namespace cyclo
