#include "litichain/metrics.hpp"

#include <stdexcept>

namespace litichain {

void RetentionLedger::add(const DeletedGroup& g) {
  const double held = g.deletion - g.expiration;
  for (const DeletedUnit& u : g.units) {
    entries_.push_back({u.id, u.weight, g.expiration, g.deletion});
    unweighted_ += held;
    weighted_ += u.weight * held;
  }
}

double retention_cost(const RetentionLedger& ledger) { return ledger.weighted(); }

void HeightSeries::add(Time t, double h, double m) {
  if (!samples.empty() && t < samples.back().t) {
    throw std::logic_error("height series sample times must be non-decreasing");
  }
  samples.push_back({t, h, m});
}

TimeAverages time_averages(const HeightSeries& series, Time t_start, Time t_end) {
  if (series.samples.empty()) throw std::invalid_argument("empty height series");
  if (!(t_end > t_start)) throw std::invalid_argument("degenerate averaging window");

  double int_h = 0.0;
  double int_m = 0.0;
  double cur_h = 0.0;
  double cur_m = 0.0;
  Time cursor = t_start;
  for (const auto& s : series.samples) {
    if (s.t <= t_start) {
      cur_h = s.mean_height;
      cur_m = s.max_height;
      continue;
    }
    if (s.t >= t_end) break;
    int_h += cur_h * (s.t - cursor);
    int_m += cur_m * (s.t - cursor);
    cursor = s.t;
    cur_h = s.mean_height;
    cur_m = s.max_height;
  }
  int_h += cur_h * (t_end - cursor);
  int_m += cur_m * (t_end - cursor);
  const double span = t_end - t_start;
  return {int_h / span, int_m / span};
}

std::uint64_t nonce_count(const std::vector<std::uint64_t>& units_per_block) {
  std::uint64_t eps = 1;  // genesis
  for (std::uint64_t n : units_per_block) eps += n;
  return eps;
}

}  // namespace litichain
