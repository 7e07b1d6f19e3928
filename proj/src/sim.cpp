#include "litichain/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <tuple>

namespace litichain {

namespace {

enum EventKind : int { kExpire = 0, kDelete = 1, kInsert = 2 };

struct Event {
  Time t;
  int kind;
  std::uint64_t key;  // group index, or trace position for insertions

  // min-heap order: time, then deletions before insertions, then key
  bool operator>(const Event& o) const {
    return std::tie(t, kind, key) > std::tie(o.t, o.kind, o.key);
  }
};

std::string fmt_time(Time t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

}  // namespace

RunResult run(const LifetimeTrace& trace, const SimParams& params) {
  params.validate();
  trace.validate();

  RunResult result;
  result.variant = to_string(params.chain.variant.kind);
  result.K = params.chain.K;
  result.mu = params.chain.variant.mu;
  result.lambda = params.chain.variant.lwb_weight;
  result.difficulty = params.chain.difficulty;
  result.seed = params.seed;

  ChainState state;
  RetentionLedger ledger;
  HeightSeries series;
  Sha256Stream log;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue;
  std::vector<std::uint64_t> units_per_block;

  for (size_t i = 0; i < trace.records.size(); ++i) {
    queue.push({trace.records[i].arrival_time, kInsert, static_cast<std::uint64_t>(i)});
  }

  Time last_deletion = 0;
  bool any_deletion = false;

  auto verify_now = [&] {
    VerificationReport report = verify_chain(state);
    ++result.verify_passes;
    if (!report.ok()) throw VerificationError(report);
  };

  auto after_event = [&](Time t) {
    series.add(t, state.mean_height(), state.max_height());
    ++result.events;
    if (params.verify_every > 0 && result.events % params.verify_every == 0) verify_now();
  };

  while (!queue.empty()) {
    Event ev = queue.top();
    queue.pop();
    if (ev.kind == kInsert) {
      const TraceRecord& rec = trace.records[ev.key];
      InsertReport rep = state.insert_block(params.chain, rec.arrival_time, rec.lifetime);
      units_per_block.push_back(rep.units.size());
      ++result.logical_blocks;
      if (rep.expanded) ++result.expanded_blocks;
      if (rep.aog_edge) ++result.aog_edges;

      queue.push({state.groups().at(rep.group).expiration, kExpire, rep.group});
      queue.push({state.groups().at(rep.group).deletion, kDelete, rep.group});
      for (const RetentionExtension& ext : rep.extensions) {
        queue.push({ext.new_deletion, kDelete, ext.group});
      }

      log.update("I|" + std::to_string(rep.group) + "|" + fmt_time(rec.arrival_time) + "|u" +
                 std::to_string(rep.units.size()) + "|h" + std::to_string(rep.head_height) +
                 (rep.aog_edge ? "|aog" : "") + "\n");
      if (params.tamper_unit) {
        for (const BlockId& id : rep.units) {
          if (id.index == *params.tamper_unit) state.tamper_unit(id.index);
        }
      }
      after_event(rec.arrival_time);
    } else {
      // Lazily validate against the group's current schedule.
      auto it = state.groups().find(ev.key);
      if (it == state.groups().end()) continue;
      if (ev.kind == kExpire && (it->second.expired || it->second.expiration != ev.t)) continue;
      if (ev.kind == kDelete && it->second.deletion != ev.t) continue;

      std::vector<DeletedGroup> deleted = state.expire_and_delete(ev.t);
      for (const DeletedGroup& g : deleted) {
        ledger.add(g);
        any_deletion = true;
        last_deletion = std::max(last_deletion, g.deletion);
        log.update("D|" + std::to_string(g.base_index) + "|" + fmt_time(g.deletion) + "\n");
      }
      if (ev.kind == kExpire && deleted.empty()) {
        log.update("E|" + std::to_string(ev.key) + "|" + fmt_time(ev.t) + "\n");
      }
      after_event(ev.t);
    }
  }

  verify_now();  // drain end

  // Drain completeness: nothing but genesis may remain.
  if (!state.groups().empty()) throw std::logic_error("drain left groups behind");

  result.delta_unweighted = ledger.unweighted();
  result.delta_weighted = ledger.weighted();
  result.epsilon = state.pow_solves();
  if (result.epsilon != nonce_count(units_per_block)) {
    throw std::logic_error("PoW solve count does not reconcile with unit counts");
  }
  if (!trace.records.empty() && any_deletion) {
    const Time t0 = trace.records.front().arrival_time;
    if (last_deletion > t0) {
      TimeAverages avg = time_averages(series, t0, last_deletion);
      result.h_bar = avg.h_bar;
      result.m_bar = avg.m_bar;
    }
  }
  Hash32 digest = log.finish();
  result.event_log_hash = to_hex(digest);
  return result;
}

std::string results_csv_header() {
  return "variant,K,mu,lambda,delta_unweighted,delta_weighted,delta_rel_mu1,delta_rel_K10,"
         "h_bar,m_bar,epsilon,eps_rel_mu1,events,seed";
}

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_compact(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string result_to_csv_row(const RunResult& r, double delta_rel_mu1, double delta_rel_K10,
                              double eps_rel_mu1) {
  std::string row = r.variant;
  row += "," + std::to_string(r.K);
  row += "," + std::to_string(r.mu);
  row += "," + fmt_compact(r.lambda);
  row += "," + fmt_double(r.delta_unweighted);
  row += "," + fmt_double(r.delta_weighted);
  row += "," + fmt_double(delta_rel_mu1);
  row += "," + fmt_double(delta_rel_K10);
  row += "," + fmt_double(r.h_bar);
  row += "," + fmt_double(r.m_bar);
  row += "," + std::to_string(r.epsilon);
  row += "," + fmt_double(eps_rel_mu1);
  row += "," + std::to_string(r.events);
  row += "," + std::to_string(r.seed);
  return row;
}

std::string SweepTable::to_csv() const {
  auto find = [&](const std::string& variant, std::uint64_t K,
                  std::uint64_t mu) -> const RunResult* {
    for (const RunResult& r : rows) {
      if (r.variant == variant && r.K == K && r.mu == mu) return &r;
    }
    return nullptr;
  };
  std::string out = results_csv_header() + "\n";
  const double nan = std::nan("");
  for (const RunResult& r : rows) {
    const RunResult* mu1 = find(r.variant, r.K, 1);
    const RunResult* k10 = find(r.variant, 10, r.mu);
    double drel_mu1 = (mu1 && mu1->delta_weighted > 0) ? r.delta_weighted / mu1->delta_weighted
                                                       : nan;
    double drel_k10 = (k10 && k10->delta_weighted > 0) ? r.delta_weighted / k10->delta_weighted
                                                       : nan;
    double erel_mu1 = (mu1 && mu1->epsilon > 0)
                          ? static_cast<double>(r.epsilon) / static_cast<double>(mu1->epsilon)
                          : nan;
    out += result_to_csv_row(r, drel_mu1, drel_k10, erel_mu1) + "\n";
  }
  return out;
}

SweepTable sweep(const LifetimeTrace& trace, const std::vector<std::uint64_t>& K_values,
                 const std::vector<std::uint64_t>& mu_values,
                 const std::vector<VariantKind>& variants, const SimParams& base) {
  if (K_values.empty() || mu_values.empty() || variants.empty()) {
    throw std::invalid_argument("sweep needs non-empty parameter lists");
  }
  SweepTable table;
  for (VariantKind v : variants) {
    for (std::uint64_t K : K_values) {
      std::vector<std::uint64_t> mus;
      if (v == VariantKind::Plain) {
        mus.push_back(1);  // plain forces mu = 1
      } else {
        mus = mu_values;
      }
      for (std::uint64_t mu : mus) {
        SimParams p = base;
        p.chain.variant.kind = v;
        p.chain.variant.mu = mu;
        p.chain.K = K;
        table.rows.push_back(run(trace, p));
      }
    }
  }
  return table;
}

}  // namespace litichain
