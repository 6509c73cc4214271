#pragma once

#include <stdexcept>
#include <string>

namespace weuler {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad tables, bad JSON, bad indices, ...).
struct InvalidInput : Error {
  using Error::Error;
};
struct NotAGroup : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotAnAction : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotAPermutation : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotPrime : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct IndexOutOfRange : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct GroupMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct SizeMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotACycle : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonAbelianK : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Resource guards.
struct SizeGuardExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// A mathematical identity that must hold did not.  These signal either an
// implementation bug (InternalMismatch) or an input outside the theory's
// hypotheses (NonIntegral on a formal chi table, say).
struct CheckFailure : Error {
  using Error::Error;
};
struct InternalMismatch : CheckFailure {
  using CheckFailure::CheckFailure;
};
struct NonIntegral : CheckFailure {
  using CheckFailure::CheckFailure;
};

// space_product on virtual inputs is defined only at product subgroups.
struct VirtualProductUnsupported : Error {
  using Error::Error;
};

}  // namespace weuler
