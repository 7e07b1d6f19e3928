#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "litichain/chain.hpp"

namespace litichain {

/// Per-unit retention records appended at each deletion.
class RetentionLedger {
 public:
  struct Entry {
    BlockId id;
    double weight;
    Time expiration;
    Time deletion;
  };

  void add(const DeletedGroup& g);
  const std::vector<Entry>& entries() const { return entries_; }

  /// Sum of weight * (d - e); with all weights 1 this is the plain retention
  /// cost, weights account for sub-block and LWB sizes.
  double weighted() const { return weighted_; }
  double unweighted() const { return unweighted_; }

 private:
  std::vector<Entry> entries_;
  double weighted_ = 0.0;
  double unweighted_ = 0.0;
};

double retention_cost(const RetentionLedger& ledger);

/// (time, mean height, max height) samples taken after every event.
struct HeightSeries {
  struct Sample {
    Time t;
    double mean_height;
    double max_height;
  };
  std::vector<Sample> samples;

  void add(Time t, double h, double m);
};

struct TimeAverages {
  double h_bar = 0.0;
  double m_bar = 0.0;
};

/// Piecewise-constant time averages of H and M over [t_start, t_end]; the
/// value between samples is the most recent sample's value.
TimeAverages time_averages(const HeightSeries& series, Time t_start, Time t_end);

/// Nonce-computation count: genesis plus one per mined unit.
std::uint64_t nonce_count(const std::vector<std::uint64_t>& units_per_block);

struct RunResult {
  std::string variant;
  std::uint64_t K = 0;
  std::uint64_t mu = 1;
  double lambda = 0.01;
  std::uint32_t difficulty = 0;
  std::uint64_t seed = 0;

  double delta_unweighted = 0.0;
  double delta_weighted = 0.0;
  double h_bar = 0.0;
  double m_bar = 0.0;
  std::uint64_t epsilon = 0;
  std::uint64_t events = 0;

  std::uint64_t logical_blocks = 0;
  std::uint64_t expanded_blocks = 0;
  std::uint64_t aog_edges = 0;
  std::uint64_t verify_passes = 0;
  std::string event_log_hash;
};

}  // namespace litichain
