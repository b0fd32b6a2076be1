#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

// Base for everything thrown by this library, so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation landed on the boundary between map types (|tr| within
// tolerance of 2 but not recognisably exact) and refuses to guess.
struct AmbiguousTrace : Error {
    explicit AmbiguousTrace(const std::string& what) : Error(what) {}
};

// A holonomy that should have been conjugated into the real group kept a
// non-negligible imaginary part.
struct NonRealTrace : Error {
    explicit NonRealTrace(const std::string& what) : Error(what) {}
};

// Internal cross-checks disagreed (branch residuals, replay mismatches...).
// Always a bug or a genuinely inconsistent input, never a tolerance issue
// the caller should retry around.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

// Root bracketing / bisection could not pin a parameter.
struct SolverFailure : Error {
    explicit SolverFailure(const std::string& what) : Error(what) {}
};

// A geometric constraint degenerated (zero/negative radius, coincident
// points where distinct ones are required).
struct DegenerateRadius : Error {
    explicit DegenerateRadius(const std::string& what) : Error(what) {}
};

// A solve bracket does not straddle the target value (and widening it a
// bounded number of times did not help).
struct BracketFailure : SolverFailure {
    explicit BracketFailure(const std::string& what) : SolverFailure(what) {}
};

// Certificate generation gave up on a target.
struct GeneratorFailure : Error {
    explicit GeneratorFailure(const std::string& what) : Error(what) {}
};

// A certificate step is not admissible in the state it was applied to.
struct InvalidStep : Error {
    explicit InvalidStep(const std::string& what) : Error(what) {}
};

// The commutator witness only exists for odd cycle lengths.
struct EvenK : Error {
    explicit EvenK(const std::string& what) : Error(what) {}
};

// Malformed input file / JSON / CLI argument.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace moebius
