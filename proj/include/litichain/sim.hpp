#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "litichain/chain.hpp"
#include "litichain/metrics.hpp"
#include "litichain/verify.hpp"
#include "litichain/workload.hpp"

namespace litichain {

struct SimParams {
  ChainParams chain;
  std::uint64_t verify_every = 100;  // full verification cadence in events; 0 = drain end only
  std::uint64_t seed = 0;            // echoed into results
  std::optional<std::uint64_t> tamper_unit;  // test hook: corrupt this unit after insertion

  void validate() const { chain.validate(); }
};

/// Raised when the cryptographic verification pass reports failures; carries
/// the offending units in the message.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const VerificationReport& report)
      : std::runtime_error("chain verification failed: " + report.summary()),
        report_(report) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Runs the discrete-event loop over one trace: arrivals in order, expiries
/// and deletions before same-time insertions, then a drain phase until only
/// genesis remains. Samples H/M at every event and verifies the chain at the
/// configured cadence plus once after the drain.
RunResult run(const LifetimeTrace& trace, const SimParams& params);

struct SweepTable {
  std::vector<RunResult> rows;
  std::string to_csv() const;
};

/// Cartesian product of variants x K values x mu values over one trace, in
/// deterministic row order. Plain is swept once per K (mu forced to 1).
SweepTable sweep(const LifetimeTrace& trace, const std::vector<std::uint64_t>& K_values,
                 const std::vector<std::uint64_t>& mu_values,
                 const std::vector<VariantKind>& variants, const SimParams& base);

std::string results_csv_header();
std::string result_to_csv_row(const RunResult& r, double delta_rel_mu1, double delta_rel_K10,
                              double eps_rel_mu1);

}  // namespace litichain
