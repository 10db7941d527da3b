#pragma once

#include <stdexcept>
#include <string>

namespace isolink {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A multiplication table fails a group axiom; message names the witness.
struct AxiomViolation : Error {
    using Error::Error;
};

/// A subgroup chain is empty, not strictly increasing, or not made of subgroups.
struct InvalidChain : Error {
    using Error::Error;
};

/// An operation requiring a rigid action was given a non-rigid complex.
struct NotRigid : Error {
    using Error::Error;
};

/// A map declared isovariant changes the isotropy of some simplex.
struct NotIsovariant : Error {
    using Error::Error;
};

/// A representation description is outside the supported catalogue.
struct UnsupportedRepresentation : Error {
    using Error::Error;
};

/// Connectivity functions with different modes or key sets were combined.
struct ModeMismatch : Error {
    using Error::Error;
};

/// A cube rule was invoked with the wrong number of edge functions.
struct WrongArity : Error {
    using Error::Error;
};

/// A square handed to the cocartesian check does not strictly commute.
struct NonCommuting : Error {
    using Error::Error;
};

/// A path or lifting construction needs H strictly contained in K.
struct NotAStrictPair : Error {
    using Error::Error;
};

/// A sampled evaluator broke its declared fixed-point contract.
struct ContractViolation : Error {
    using Error::Error;
};

/// A scene document is not syntactically valid.
struct ParseError : Error {
    using Error::Error;
};

/// A scene document is well-formed but semantically inconsistent.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace isolink
