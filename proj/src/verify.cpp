#include "litichain/verify.hpp"

#include <algorithm>
#include <sstream>

namespace litichain {

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::HashMismatch: return "hash-mismatch";
    case FailureKind::MissingReferent: return "missing-referent";
    case FailureKind::PowUnsatisfied: return "pow-unsatisfied";
  }
  return "?";
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "checked " << checked << " units, " << failures.size() << " failure(s)";
  for (const auto& f : failures) os << "; " << to_string(f.id) << ": " << to_string(f.kind);
  return os.str();
}

VerificationReport verify_chain(const ChainState& state) {
  VerificationReport report;
  const auto& units = state.units();
  for (const auto& [idx, unit] : units) {
    ++report.checked;
    const Hash32 recomputed = unit.header.block_hash();
    if (recomputed != unit.hash) {
      report.failures.push_back({unit.id, FailureKind::HashMismatch});
    }
    if (!satisfies_pow(unit.hash, unit.header.difficulty_bits)) {
      report.failures.push_back({unit.id, FailureKind::PowUnsatisfied});
    }
    if (unit.kind == UnitKind::Genesis) continue;

    const bool expired = state.groups().at(unit.group).expired;
    if (expired) continue;

    auto parent = units.find(unit.eog_parent);
    if (parent == units.end()) {
      report.failures.push_back({unit.id, FailureKind::MissingReferent});
    } else {
      const Hash32& expected = parent->second.kind == UnitKind::Genesis
                                   ? genesis_hash()
                                   : parent->second.hash;
      if (unit.header.parent_hash != expected) {
        report.failures.push_back({unit.id, FailureKind::HashMismatch});
      }
    }
    if (unit.aog_prev) {
      auto prev = units.find(*unit.aog_prev);
      if (prev == units.end()) {
        report.failures.push_back({unit.id, FailureKind::MissingReferent});
      } else if (unit.header.prev_hash != prev->second.hash) {
        report.failures.push_back({unit.id, FailureKind::HashMismatch});
      }
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
            [](const VerificationFailure& a, const VerificationFailure& b) {
              return a.id.index < b.id.index;
            });
  return report;
}

}  // namespace litichain
