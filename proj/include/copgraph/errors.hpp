#pragma once

#include <stdexcept>
#include <string>

namespace copgraph {

// Error taxonomy shared by the whole library. Everything derives from
// copgraph::error so callers can catch the library in one clause.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside the family's domain, or an operation the family
// does not support (e.g. a density for a bound copula).
struct domain_error : error {
    using error::error;
};

// Caller misuse: bad argument combinations, malformed descriptors, reps=0.
struct usage_error : error {
    using error::error;
};

// File reading/writing problems, including malformed edge lists.
struct io_error : error {
    using error::error;
};

// A computation produced non-finite intermediates it cannot recover from.
struct numeric_error : error {
    using error::error;
};

// The requested quantity does not exist for this input (e.g. assortativity
// of a regular graph, where the end-degree variance is zero).
struct undefined_error : error {
    using error::error;
};

// Graph too small for the requested motif count.
struct size_error : error {
    using error::error;
};

} // namespace copgraph
