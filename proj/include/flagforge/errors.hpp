#pragma once
#include <stdexcept>
#include <string>

namespace flagforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define FLAGFORGE_ERROR_TYPE(Name)                                 \
    struct Name : Error {                                          \
        explicit Name(const std::string& m) : Error(m) {}          \
    }

FLAGFORGE_ERROR_TYPE(FieldMismatch);      // operands live over different fields
FLAGFORGE_ERROR_TYPE(DimensionMismatch);  // shapes/ambient dims disagree
FLAGFORGE_ERROR_TYPE(ContainmentError);   // required inclusion does not hold
FLAGFORGE_ERROR_TYPE(NotInvertible);      // singular matrix where a unit is required
FLAGFORGE_ERROR_TYPE(NotAnIdeal);         // carrier fails the one-sided closure check
FLAGFORGE_ERROR_TYPE(UnsupportedCover);   // operation needs a different cover shape
FLAGFORGE_ERROR_TYPE(InvariantViolation); // a structural axiom of the value fails
FLAGFORGE_ERROR_TYPE(EmptyRestriction);   // restriction keeps no component
FLAGFORGE_ERROR_TYPE(SchemaError);        // malformed serialized input
FLAGFORGE_ERROR_TYPE(BoundError);         // enumeration bound guard tripped

#undef FLAGFORGE_ERROR_TYPE

} // namespace flagforge
