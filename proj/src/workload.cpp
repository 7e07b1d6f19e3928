#include "litichain/workload.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace litichain {

namespace {

constexpr double kQuantum = 1e-6;

double quantize6(double x) { return std::round(x * 1e6) / 1e6; }

/// Uniform in [0, 1) with 53 significant bits, independent of library
/// distribution internals so traces replay across platforms.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gauss(std::mt19937_64& rng, double mean, double sd) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + sd * z;
}

std::string format_row(const TraceRecord& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu,%.6f,%.6f", static_cast<unsigned long long>(r.index),
                r.arrival_time, r.lifetime);
  return buf;
}

}  // namespace

void MixtureSpec::validate() const {
  if (components.empty()) throw std::invalid_argument("mixture needs at least one component");
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.stddev > 0)) throw std::invalid_argument("component stddev must be positive");
    if (c.probability < 0) throw std::invalid_argument("negative component probability");
    total += c.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");
  if (!(min_lifetime > 0)) throw std::invalid_argument("min_lifetime must be positive");
}

void ArrivalModel::validate() const {
  if (kind == Kind::FixedInterval) {
    if (!(interval >= kQuantum)) throw std::invalid_argument("interval must be >= 1e-6");
  } else {
    if (!(rate > 0)) throw std::invalid_argument("rate must be positive");
  }
}

std::string ArrivalModel::describe() const {
  std::ostringstream os;
  if (kind == Kind::FixedInterval) {
    os << "fixed(" << interval << ")";
  } else {
    os << "poisson(" << rate << ")";
  }
  return os.str();
}

void LifetimeTrace::validate() const {
  Time prev = -1.0;
  for (size_t i = 0; i < records.size(); ++i) {
    const TraceRecord& r = records[i];
    if (r.index != i) throw std::invalid_argument("trace indices must be 0..n-1");
    if (!(r.arrival_time > prev)) {
      throw std::invalid_argument("arrival times must be strictly increasing");
    }
    if (!(r.lifetime > 0)) throw std::invalid_argument("lifetimes must be positive");
    prev = r.arrival_time;
  }
}

LifetimeTrace sample_trace(const MixtureSpec& spec, std::uint64_t n, const ArrivalModel& arrivals,
                           std::uint64_t seed) {
  spec.validate();
  arrivals.validate();
  if (n < 1) throw std::invalid_argument("n must be >= 1");

  std::mt19937_64 rng(seed);
  LifetimeTrace trace;
  trace.seed = seed;
  {
    std::ostringstream os;
    os << "mixture[";
    for (const auto& c : spec.components) {
      os << "N(" << c.mean << "," << c.stddev << ")@" << c.probability << " ";
    }
    os << "min=" << spec.min_lifetime << "] arrivals=" << arrivals.describe();
    trace.generator = os.str();
  }

  trace.records.reserve(n);
  Time clock = 0.0;
  Time prev_arrival = -1.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    Time arrival;
    if (arrivals.kind == ArrivalModel::Kind::FixedInterval) {
      arrival = quantize6(static_cast<double>(i) * arrivals.interval);
    } else {
      double u = uniform01(rng);
      while (u >= 1.0) u = uniform01(rng);
      clock += -std::log(1.0 - u) / arrivals.rate;
      arrival = quantize6(clock);
    }
    if (arrival <= prev_arrival) arrival = prev_arrival + kQuantum;
    prev_arrival = arrival;

    const double pick = uniform01(rng);
    double acc = 0.0;
    const MixtureComponent* comp = &spec.components.back();
    for (const auto& c : spec.components) {
      acc += c.probability;
      if (pick < acc) {
        comp = &c;
        break;
      }
    }
    double lifetime = gauss(rng, comp->mean, comp->stddev);
    if (lifetime < spec.min_lifetime) lifetime = spec.min_lifetime;
    lifetime = quantize6(lifetime);
    if (lifetime < spec.min_lifetime) lifetime = quantize6(spec.min_lifetime);

    trace.records.push_back({i, arrival, lifetime});
  }
  trace.validate();
  return trace;
}

std::string trace_to_csv(const LifetimeTrace& trace) {
  std::string out = "index,arrival_time,lifetime\n";
  for (const TraceRecord& r : trace.records) {
    out += format_row(r);
    out += '\n';
  }
  return out;
}

LifetimeTrace trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty trace file");
  if (line == "index,arrival_time,lifetime\r") line.pop_back();
  if (line != "index,arrival_time,lifetime") {
    throw std::invalid_argument("bad trace header: " + line);
  }
  LifetimeTrace trace;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TraceRecord r{};
    char extra;
    unsigned long long idx;
    if (std::sscanf(line.c_str(), "%llu,%lf,%lf%c", &idx, &r.arrival_time, &r.lifetime, &extra) !=
        3) {
      throw std::invalid_argument("malformed trace row at line " + std::to_string(lineno));
    }
    r.index = idx;
    trace.records.push_back(r);
  }
  trace.validate();
  return trace;
}

void save_trace(const LifetimeTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << trace_to_csv(trace);
  if (!out) throw std::runtime_error("write failed: " + path);
}

LifetimeTrace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return trace_from_csv(ss.str());
}

TraceStats trace_stats(const LifetimeTrace& trace) {
  TraceStats s;
  s.count = trace.records.size();
  if (s.count == 0) return s;
  double sum = 0.0;
  s.min = trace.records.front().lifetime;
  s.max = s.min;
  std::uint64_t below = 0;
  for (const TraceRecord& r : trace.records) {
    sum += r.lifetime;
    s.min = std::min(s.min, r.lifetime);
    s.max = std::max(s.max, r.lifetime);
    if (r.lifetime < 750.0) ++below;
  }
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (const TraceRecord& r : trace.records) {
    const double d = r.lifetime - s.mean;
    ss += d * d;
  }
  s.stddev = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
  s.below_750 = static_cast<double>(below) / static_cast<double>(s.count);
  return s;
}

}  // namespace litichain
