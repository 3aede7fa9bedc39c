#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input describes a relation whose closure would force x < x.
struct CycleError : Error {
    using Error::Error;
};

// A relation references an element name that was never declared.
struct UnknownElement : Error {
    using Error::Error;
};

// Operation requires a nonempty poset.
struct EmptyPoset : Error {
    using Error::Error;
};

// Input exceeds a configured size cap (see Caps).
struct SizeCapExceeded : Error {
    using Error::Error;
};

// The order has a pair without a unique greatest lower / least upper bound.
struct NotLattice : Error {
    using Error::Error;
};

// Operation is only defined for distributive lattices.
struct NotDistributive : Error {
    using Error::Error;
};

// Operation is only defined for simple posets.
struct NotSimple : Error {
    using Error::Error;
};

// Two redundantly computed quantities disagree; data is corrupt or there is a bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

// A (poset, lattice) pair was passed where the lattice was not built from the poset.
struct MismatchedPair : Error {
    using Error::Error;
};

// Checked 128-bit arithmetic overflowed.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

// Trailing numerator coefficients failed to vanish; the Hilbert function is wrong.
struct StabilizationFailure : Error {
    using Error::Error;
};

// A stated precondition does not hold for the given arguments.
struct PreconditionViolated : Error {
    using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace hibi
