#pragma once

#include <stdexcept>

namespace uudd {

// A brute-force enumeration was asked to exceed its configured feasibility bound.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient that must descale to a (nonnegative) integer did not.
// Signals an implementation bug, never expected on a correct build.
struct nonintegral_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A Seidel seed fails the sign-symmetry precondition a_{0,i} = (-1)^i a_{i,0}.
struct sign_symmetry_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace uudd
