#include <stdexcept>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "litichain/workload.hpp"

using namespace litichain;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("sampling is deterministic in the seed") {
  MixtureSpec spec;
  ArrivalModel arr;
  LifetimeTrace a = sample_trace(spec, 200, arr, 42);
  LifetimeTrace b = sample_trace(spec, 200, arr, 42);
  CHECK(trace_to_csv(a) == trace_to_csv(b));
  LifetimeTrace c = sample_trace(spec, 200, arr, 43);
  CHECK(trace_to_csv(a) != trace_to_csv(c));
}

TEST_CASE("single record starts at time zero under fixed arrivals") {
  LifetimeTrace t = sample_trace(MixtureSpec{}, 1, ArrivalModel{}, 7);
  REQUIRE(t.records.size() == 1);
  CHECK(t.records[0].arrival_time == 0.0);
  CHECK(t.records[0].lifetime >= 1.0);
}

TEST_CASE("mixture moments match the analytic values") {
  // mean = 750, stddev = sqrt(110^2 + 450^2) ~ 463.2
  LifetimeTrace t = sample_trace(MixtureSpec{}, 10000, ArrivalModel{}, 7);
  TraceStats s = trace_stats(t);
  CHECK(s.mean > 735.0);
  CHECK(s.mean < 765.0);
  CHECK(s.stddev > 448.0);
  CHECK(s.stddev < 478.0);
  CHECK(s.below_750 > 0.47);
  CHECK(s.below_750 < 0.53);
}

TEST_CASE("lifetimes never fall below the clamp floor") {
  MixtureSpec spec;
  spec.components = {{1.0, 50.0, 1.0}};
  spec.min_lifetime = 2.5;
  LifetimeTrace t = sample_trace(spec, 2000, ArrivalModel{}, 3);
  for (const auto& r : t.records) CHECK(r.lifetime >= 2.5);
}

TEST_CASE("poisson arrivals are strictly increasing with the right mean gap") {
  ArrivalModel arr;
  arr.kind = ArrivalModel::Kind::Poisson;
  arr.rate = 2.0;
  LifetimeTrace t = sample_trace(MixtureSpec{}, 5000, arr, 11);
  double prev = -1.0;
  for (const auto& r : t.records) {
    CHECK(r.arrival_time > prev);
    prev = r.arrival_time;
  }
  const double mean_gap = t.records.back().arrival_time / 4999.0;
  CHECK(mean_gap > 0.45);
  CHECK(mean_gap < 0.55);
}

TEST_CASE("save and load round trip exactly") {
  TempFile f("litichain_trace_roundtrip.csv");
  LifetimeTrace t = sample_trace(MixtureSpec{}, 1000, ArrivalModel{}, 99);
  save_trace(t, f.path);
  LifetimeTrace back = load_trace(f.path);
  REQUIRE(back.records.size() == t.records.size());
  CHECK(back.records == t.records);
  TempFile f2("litichain_trace_roundtrip2.csv");
  save_trace(back, f2.path);
  CHECK(trace_to_csv(back) == trace_to_csv(t));
}

TEST_CASE("handwritten fixture loads field for field") {
  const std::string text =
      "index,arrival_time,lifetime\n"
      "0,0.000000,20.000000\n"
      "1,1.000000,39.000000\n"
      "2,2.500000,7.250000\n";
  LifetimeTrace t = trace_from_csv(text);
  REQUIRE(t.records.size() == 3);
  CHECK(t.records[0] == TraceRecord{0, 0.0, 20.0});
  CHECK(t.records[1] == TraceRecord{1, 1.0, 39.0});
  CHECK(t.records[2] == TraceRecord{2, 2.5, 7.25});
  CHECK(trace_to_csv(t) == text);
}

TEST_CASE("empty trace saves as a header-only file") {
  TempFile f("litichain_trace_empty.csv");
  LifetimeTrace t;
  save_trace(t, f.path);
  LifetimeTrace back = load_trace(f.path);
  CHECK(back.records.empty());
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(trace_from_csv(""));
  CHECK_THROWS(trace_from_csv("wrong,header,here\n"));
  CHECK_THROWS(trace_from_csv("index,arrival_time,lifetime\n0,abc,1.0\n"));
  CHECK_THROWS(trace_from_csv("index,arrival_time,lifetime\n0,0.0,1.0\n1,0.0,1.0\n"));
  CHECK_THROWS(trace_from_csv("index,arrival_time,lifetime\n0,0.0,0.0\n"));
  CHECK_THROWS(trace_from_csv("index,arrival_time,lifetime\n0,0.0,-3.0\n"));
  CHECK_THROWS(trace_from_csv("index,arrival_time,lifetime\n5,0.0,1.0\n"));
  CHECK_THROWS(load_trace("/nonexistent/path/trace.csv"));
}

TEST_CASE("generation rejects invalid parameters") {
  CHECK_THROWS_AS(sample_trace(MixtureSpec{}, 0, ArrivalModel{}, 1), std::invalid_argument);
  MixtureSpec bad;
  bad.components = {{300.0, 0.0, 1.0}};
  CHECK_THROWS_AS(sample_trace(bad, 1, ArrivalModel{}, 1), std::invalid_argument);
  MixtureSpec sum;
  sum.components = {{300.0, 10.0, 0.4}, {600.0, 10.0, 0.4}};
  CHECK_THROWS_AS(sample_trace(sum, 1, ArrivalModel{}, 1), std::invalid_argument);
  ArrivalModel arr;
  arr.interval = 0.0;
  CHECK_THROWS_AS(sample_trace(MixtureSpec{}, 1, arr, 1), std::invalid_argument);
  ArrivalModel poisson;
  poisson.kind = ArrivalModel::Kind::Poisson;
  poisson.rate = -1.0;
  CHECK_THROWS_AS(sample_trace(MixtureSpec{}, 1, poisson, 1), std::invalid_argument);
}
