#include <stdexcept>
#include <random>

#include "doctest.h"
#include "litichain/metrics.hpp"

using namespace litichain;

TEST_CASE("retention ledger") {
  RetentionLedger ledger;
  SUBCASE("no retention means zero cost") {
    DeletedGroup g;
    g.expiration = 20.0;
    g.deletion = 20.0;
    g.units = {{BlockId{1, 0}, 1.0, 1}};
    ledger.add(g);
    CHECK(retention_cost(ledger) == 0.0);
    CHECK(ledger.unweighted() == 0.0);
  }
  SUBCASE("a block held from 20 to 40 costs 20") {
    DeletedGroup g;
    g.expiration = 20.0;
    g.deletion = 40.0;
    g.units = {{BlockId{1, 0}, 1.0, 1}};
    ledger.add(g);
    CHECK(retention_cost(ledger) == 20.0);
  }
  SUBCASE("weights scale the held interval") {
    DeletedGroup g;
    g.expiration = 10.0;
    g.deletion = 14.0;
    g.units = {{BlockId{2, 0}, 1.0, 1}, {BlockId{3, 1}, 0.01, 2}};
    ledger.add(g);
    CHECK(ledger.unweighted() == doctest::Approx(8.0));
    CHECK(ledger.weighted() == doctest::Approx(4.0 * 1.01));
    CHECK(ledger.entries().size() == 2);
  }
}

TEST_CASE("time averages") {
  SUBCASE("constant series averages to itself") {
    HeightSeries s;
    s.add(0.0, 5.0, 7.0);
    TimeAverages avg = time_averages(s, 0.0, 10.0);
    CHECK(avg.h_bar == doctest::Approx(5.0));
    CHECK(avg.m_bar == doctest::Approx(7.0));
  }
  SUBCASE("two equal-length segments average arithmetically") {
    HeightSeries s;
    s.add(0.0, 2.0, 2.0);
    s.add(5.0, 4.0, 6.0);
    TimeAverages avg = time_averages(s, 0.0, 10.0);
    CHECK(avg.h_bar == doctest::Approx(3.0));
    CHECK(avg.m_bar == doctest::Approx(4.0));
  }
  SUBCASE("window can start after the first sample") {
    HeightSeries s;
    s.add(0.0, 2.0, 2.0);
    s.add(6.0, 8.0, 8.0);
    TimeAverages avg = time_averages(s, 4.0, 8.0);
    CHECK(avg.h_bar == doctest::Approx(5.0));  // 2 for [4,6), 8 for [6,8)
  }
  SUBCASE("errors") {
    HeightSeries empty;
    CHECK_THROWS_AS(time_averages(empty, 0.0, 1.0), std::invalid_argument);
    HeightSeries s;
    s.add(0.0, 1.0, 1.0);
    CHECK_THROWS_AS(time_averages(s, 3.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(s.add(-1.0, 1.0, 1.0), std::logic_error);
  }
  SUBCASE("matches a dense left-endpoint integration oracle") {
    // Sample times sit on the oracle's millistep grid so the Riemann sum is
    // exact up to float rounding. Both sides derive times as ms/1000.0.
    std::mt19937_64 rng(31);
    HeightSeries s;
    std::uint64_t ms = 0;
    for (int i = 0; i < 1000; ++i) {
      ms += 1 + rng() % 200;
      s.add(static_cast<double>(ms) / 1000.0, static_cast<double>(rng() % 1000) / 10.0,
            static_cast<double>(rng() % 2000) / 10.0);
    }
    const std::uint64_t ms0 = 1000;
    const std::uint64_t ms1 = ms - 1000;
    const double t0 = static_cast<double>(ms0) / 1000.0;
    const double t1 = static_cast<double>(ms1) / 1000.0;
    TimeAverages avg = time_averages(s, t0, t1);

    double sum_h = 0.0;
    double sum_m = 0.0;
    size_t idx = 0;
    double cur_h = 0.0;
    double cur_m = 0.0;
    for (std::uint64_t m = ms0; m < ms1; ++m) {
      const double x = static_cast<double>(m) / 1000.0;
      while (idx < s.samples.size() && s.samples[idx].t <= x) {
        cur_h = s.samples[idx].mean_height;
        cur_m = s.samples[idx].max_height;
        ++idx;
      }
      sum_h += cur_h;
      sum_m += cur_m;
    }
    const double steps = static_cast<double>(ms1 - ms0);
    CHECK(avg.h_bar == doctest::Approx(sum_h / steps).epsilon(1e-6));
    CHECK(avg.m_bar == doctest::Approx(sum_m / steps).epsilon(1e-6));
  }
}

TEST_CASE("nonce count is genesis plus one per mined unit") {
  CHECK(nonce_count({}) == 1);
  CHECK(nonce_count({50, 50}) == 101);
  CHECK(nonce_count({60, 1}) == 62);
  CHECK(nonce_count({100, 1}) == 102);
}
