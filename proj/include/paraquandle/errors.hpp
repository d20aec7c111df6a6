// paraquandle — exception taxonomy shared across the library.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>

namespace pq {

/// Malformed diagram input (arc table, PD code, CLI arguments).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The solver could not produce the promised normal form (e.g. a component
/// that resists every splitting strategy).
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation exceeded its term-count or wall-clock budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric stage failure: root refinement did not converge, or a defect
/// exceeded tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A reduced lexicographic basis is not in shape position over the requested
/// main variable. Callers treat this as a signal to split the component.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pq
