#pragma once

#include <string>
#include <vector>

#include "litichain/chain.hpp"

namespace litichain {

enum class FailureKind { HashMismatch, MissingReferent, PowUnsatisfied };

std::string to_string(FailureKind k);

struct VerificationFailure {
  BlockId id;
  FailureKind kind;

  bool operator==(const VerificationFailure&) const = default;
};

struct VerificationReport {
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// Recomputes every stored unit's hash from its header and checks proof of
/// work; for non-expired units additionally resolves both hash referents
/// (expiration-order parent, arrival referent) against stored blocks.
/// Retained-expired units keep only their local checks: their referents may
/// have been legitimately deleted already.
VerificationReport verify_chain(const ChainState& state);

}  // namespace litichain
