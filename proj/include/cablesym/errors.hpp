#pragma once

#include <stdexcept>

namespace cablesym {

/// Operation requested in a geometry regime where it is undefined
/// (e.g. the general change of variable at nu = 2 or a = 0).
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Conformal map evaluated at a time where gamma*t + delta crosses zero
/// (or is negative, so the sqrt weight is undefined).
struct SingularTimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Bessel order outside the supported real range.
struct UnsupportedOrderError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace cablesym
