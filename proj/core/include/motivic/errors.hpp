#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Base class for all errors raised by the engine.  Every failure mode that a
/// caller can provoke with bad input derives from this; internal invariant
/// violations use assertions instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input that fails structural validation (bad dimensions, malformed data).
struct InvalidInput : Error {
  using Error::Error;
};

/// Duality was requested for a symbol that is not flagged proper+smooth or has
/// no recorded dimension.
struct DualityUndefined : Error {
  using Error::Error;
};

/// A basis change met a symbol that does not belong to the given context.
struct UnknownSymbol : Error {
  using Error::Error;
};

/// Two symbols agreed on their identity key but disagreed on dimension or the
/// proper+smooth flag; the data is inconsistent.
struct SymbolClash : Error {
  using Error::Error;
};

/// Point-count specialization hit a symbol the oracle has no count for.
struct MissingCount : Error {
  using Error::Error;
};

/// Point-count specialization produced a non-integral value.
struct NonIntegralSpecialization : Error {
  using Error::Error;
};

/// A rational expression had a genuine pole at T = infinity.
struct NotRegularAtInfinity : Error {
  using Error::Error;
};

/// A rational expression is not a power series in T (negative-order part).
struct NotExpandable : Error {
  using Error::Error;
};

/// A simplex that is not part of the triangulation was referenced.
struct NotASimplex : Error {
  using Error::Error;
};

/// A fan claimed to refine a cone contains a ray outside that cone.
struct NotARefinement : Error {
  using Error::Error;
};

/// A vector expected to have coprime entries does not.
struct NotCoprime : Error {
  using Error::Error;
};

/// An exact-enumeration routine was asked to run above its supported rank.
struct RankTooLarge : Error {
  using Error::Error;
};

/// An operation over a subset of components received the empty subset.
struct EmptySubset : Error {
  using Error::Error;
};

/// An enumeration task exceeded the configured work budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// A group-quotient relabeling met a symbol without the required tag.
struct MissingTag : Error {
  using Error::Error;
};

}  // namespace motivic
