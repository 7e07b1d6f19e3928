#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "litichain/chain.hpp"

namespace litichain {

struct MixtureComponent {
  double mean;
  double stddev;
  double probability;
};

/// Bimodal Gaussian lifetime model; defaults to the two equally likely modes
/// N(300, 110^2) and N(1200, 110^2), draws clamped at min_lifetime.
struct MixtureSpec {
  std::vector<MixtureComponent> components{{300.0, 110.0, 0.5}, {1200.0, 110.0, 0.5}};
  double min_lifetime = 1.0;

  void validate() const;
};

struct ArrivalModel {
  enum class Kind { FixedInterval, Poisson };
  Kind kind = Kind::FixedInterval;
  double interval = 1.0;  // FixedInterval spacing
  double rate = 1.0;      // Poisson arrival rate

  void validate() const;
  std::string describe() const;
};

struct TraceRecord {
  std::uint64_t index;
  Time arrival_time;
  double lifetime;

  bool operator==(const TraceRecord&) const = default;
};

struct LifetimeTrace {
  std::vector<TraceRecord> records;
  // generator echo, for reproducibility
  std::uint64_t seed = 0;
  std::string generator;

  void validate() const;  // strictly increasing arrivals, positive lifetimes
};

/// Deterministic sampling: the same (spec, n, arrivals, seed) always yields a
/// byte-identical trace. Arrival and lifetime values are quantized to six
/// fractional digits so that text round-trips are exact.
LifetimeTrace sample_trace(const MixtureSpec& spec, std::uint64_t n, const ArrivalModel& arrivals,
                           std::uint64_t seed);

void save_trace(const LifetimeTrace& trace, const std::string& path);
LifetimeTrace load_trace(const std::string& path);

std::string trace_to_csv(const LifetimeTrace& trace);
LifetimeTrace trace_from_csv(const std::string& text);

struct TraceStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  double below_750 = 0.0;  // fraction of lifetimes under the mixture midpoint
};

TraceStats trace_stats(const LifetimeTrace& trace);

}  // namespace litichain
