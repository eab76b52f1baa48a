#pragma once

#include <stdexcept>
#include <string>

namespace schub {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by apply_s_k when k is not a descent of the diagram.
struct not_a_descent_error : error {
    using error::error;
};

// Raised by the recursive character engine on non-translucent input.
struct not_translucent_error : error {
    using error::error;
};

// Raised by the reduced-word character formula on non-transparent input.
struct not_transparent_error : error {
    using error::error;
};

// Raised by verify_recursion_identity on non-clear input.
struct not_clear_error : error {
    using error::error;
};

// Raised when reduced-word enumeration exceeds its cap.
struct cap_exceeded_error : error {
    using error::error;
};

// Raised when an oracle instance exceeds the configured filling/term caps.
struct too_large_error : error {
    using error::error;
};

// Raised by zeta on input with a nonzero constant term.
struct nonzero_constant_term_error : error {
    using error::error;
};

// Raised on malformed textual input (diagram specs, permutations, polynomials).
struct parse_error : error {
    using error::error;
};

// Arithmetic invariant violation; indicates a bug, not a user error.
struct internal_error : error {
    using error::error;
};

} // namespace schub
