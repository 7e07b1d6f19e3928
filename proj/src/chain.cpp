#include "litichain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace litichain {

std::string to_string(const BlockId& id) {
  std::ostringstream os;
  os << "unit " << id.index << "#" << id.ordinal;
  return os.str();
}

void ChainParams::validate() const {
  variant.validate();
  if (difficulty > 64) throw std::invalid_argument("difficulty above desk scale");
}

ChainState::ChainState(std::uint32_t genesis_difficulty) {
  BlockUnit genesis;
  genesis.id = BlockId{0, 0};
  genesis.kind = UnitKind::Genesis;
  genesis.group = 0;
  genesis.creation_time = 0;
  genesis.expiration_time = kNever;
  genesis.eog_parent = 0;
  genesis.height = 0;
  genesis.weight = 1.0;
  genesis.header = genesis_header();
  MineResult mined = mine(genesis.header, genesis_difficulty);
  genesis.header.nonce = mined.nonce;
  genesis.header.difficulty_bits = genesis_difficulty;
  genesis.hash = mined.hash;
  ++pow_solves_;
  pow_trials_ += mined.trials;
  units_.emplace(0, std::move(genesis));

  nonexp_count_ = 1;
  nonexp_height_sum_ = 0;
  height_hist_[0] = 1;
}

std::uint64_t ChainState::select_eog_parent(Time e_new) const {
  auto it = expiration_index_.upper_bound({e_new, std::numeric_limits<std::uint64_t>::max()});
  if (it == expiration_index_.end()) return 0;
  return it->second;
}

void ChainState::track_insert_heights(const BlockGroup& g) {
  for (std::uint64_t u : g.units) {
    std::uint64_t h = units_.at(u).height;
    ++height_hist_[h];
    nonexp_height_sum_ += h;
    ++nonexp_count_;
  }
}

void ChainState::track_expire_heights(const BlockGroup& g) {
  for (std::uint64_t u : g.units) {
    std::uint64_t h = units_.at(u).height;
    auto it = height_hist_.find(h);
    if (it != height_hist_.end() && --(it->second) == 0) height_hist_.erase(it);
    nonexp_height_sum_ -= h;
    --nonexp_count_;
  }
}

InsertReport ChainState::insert_block(const ChainParams& params, Time t_new, double lifetime) {
  params.validate();
  if (!(lifetime > 0)) throw std::invalid_argument("lifetime must be positive");
  if (t_new < clock_) throw std::logic_error("insertion before current clock");
  if (!expiration_index_.empty() && expiration_index_.begin()->first.first <= t_new) {
    throw std::logic_error("insertion at or after an unprocessed expiration");
  }
  while (!deletion_queue_.empty()) {
    auto [d, base] = deletion_queue_.top();
    auto it = groups_.find(base);
    if (it == groups_.end() || it->second.deletion != d) {
      deletion_queue_.pop();
      continue;
    }
    if (d <= t_new) throw std::logic_error("insertion at or after an unprocessed deletion");
    break;
  }

  const Time e_new = t_new + lifetime;
  const std::uint64_t parent_unit = select_eog_parent(e_new);
  const std::uint64_t parent_height = units_.at(parent_unit).height;

  const std::uint64_t base_index = next_group_++;
  std::vector<Bytes> payload(1);
  payload[0].resize(8);
  for (int i = 0; i < 8; ++i) payload[0][i] = static_cast<std::uint8_t>(base_index >> (8 * i));

  BlockPlan plan = plan_block(params.variant, last_head_height_, params.K, std::move(payload));
  const bool prev_alive = last_group_ == 0 || groups_.count(last_group_) > 0;
  const bool aog_edge = plan.aog_edge && prev_alive;

  InsertReport report;
  report.group = base_index;
  report.expanded = plan.expanded;
  report.aog_edge = aog_edge;
  report.eog_parent_unit = parent_unit;
  if (aog_edge) report.aog_prev_unit = last_head_unit_;

  const std::uint64_t base_height =
      1 + std::max(parent_height, aog_edge ? last_head_height_ : 0);

  BlockGroup group;
  group.base_index = base_index;
  group.expiration = e_new;
  group.deletion = e_new;

  std::uint64_t prev_unit_index = 0;
  Hash32 prev_unit_hash{};
  for (std::uint32_t j = 0; j < plan.units.size(); ++j) {
    BlockUnit unit;
    unit.id = BlockId{next_unit_++, j};
    unit.kind = plan.units[j].kind;
    unit.group = base_index;
    unit.creation_time = t_new;
    unit.expiration_time = e_new;
    unit.height = base_height + j;
    unit.weight = plan.units[j].weight;
    unit.header.merkle_root = merkle_root(plan.units[j].payload);
    unit.header.timestamp_ms = quantize_ms(t_new);
    if (j == 0) {
      unit.eog_parent = parent_unit;
      unit.header.parent_hash = units_.at(parent_unit).hash;
      if (aog_edge) {
        unit.aog_prev = last_head_unit_;
        unit.header.prev_hash = units_.at(last_head_unit_).hash;
      }
    } else {
      unit.eog_parent = prev_unit_index;
      unit.header.parent_hash = prev_unit_hash;
    }
    MineResult mined = mine(unit.header, params.difficulty);
    unit.header.nonce = mined.nonce;
    unit.header.difficulty_bits = params.difficulty;
    unit.hash = mined.hash;
    ++pow_solves_;
    pow_trials_ += mined.trials;
    ++report.pow_solves;
    report.pow_trials += mined.trials;

    prev_unit_index = unit.id.index;
    prev_unit_hash = unit.hash;
    group.units.push_back(unit.id.index);
    report.units.push_back(unit.id);
    units_.emplace(unit.id.index, std::move(unit));
  }
  group.head = prev_unit_index;
  report.base_height = base_height;
  report.head_height = base_height + plan.units.size() - 1;

  // Retention: the referenced group must outlive the new block's expiration;
  // cascading mode propagates the extension along the arrival chain.
  if (aog_edge && last_group_ != 0) {
    std::uint64_t cur = last_group_;
    Time needed = e_new;
    while (cur != 0) {
      auto it = groups_.find(cur);
      if (it == groups_.end() || it->second.deletion >= needed) break;
      report.extensions.push_back({cur, it->second.deletion, needed});
      it->second.deletion = needed;
      deletion_queue_.push({needed, cur});
      if (!params.cascading_retention) break;
      const BlockUnit& base = units_.at(it->second.units.front());
      if (!base.aog_prev) break;
      cur = units_.at(*base.aog_prev).group;
    }
  }

  expiration_index_.emplace(std::make_pair(e_new, base_index), group.head);
  deletion_queue_.push({group.deletion, base_index});
  track_insert_heights(group);
  last_group_ = base_index;
  last_head_unit_ = group.head;
  last_head_height_ = report.head_height;
  clock_ = t_new;
  groups_.emplace(base_index, std::move(group));
  return report;
}

DeletedGroup ChainState::remove_group(std::uint64_t base_index) {
  auto it = groups_.find(base_index);
  if (it == groups_.end()) throw std::out_of_range("unknown group");
  BlockGroup& g = it->second;
  if (!g.expired) {
    expiration_index_.erase({g.expiration, base_index});
    track_expire_heights(g);
    g.expired = true;
  }
  DeletedGroup out;
  out.base_index = base_index;
  out.expiration = g.expiration;
  out.deletion = g.deletion;
  for (std::uint64_t u : g.units) {
    const BlockUnit& unit = units_.at(u);
    out.units.push_back({unit.id, unit.weight, unit.height});
    units_.erase(u);
  }
  groups_.erase(it);
  return out;
}

std::vector<DeletedGroup> ChainState::expire_and_delete(Time now) {
  if (now < clock_) throw std::logic_error("time moves backwards");
  std::vector<DeletedGroup> deleted;

  while (!expiration_index_.empty() && expiration_index_.begin()->first.first <= now) {
    std::uint64_t base = expiration_index_.begin()->first.second;
    BlockGroup& g = groups_.at(base);
    expiration_index_.erase(expiration_index_.begin());
    track_expire_heights(g);
    g.expired = true;
  }

  while (!deletion_queue_.empty() && deletion_queue_.top().first <= now) {
    auto [d, base] = deletion_queue_.top();
    deletion_queue_.pop();
    auto it = groups_.find(base);
    if (it == groups_.end() || it->second.deletion != d) continue;  // stale entry
    deleted.push_back(remove_group(base));
  }

  clock_ = std::max(clock_, now);
  return deleted;
}

std::uint64_t ChainState::height_of(const BlockId& id) const {
  auto it = units_.find(id.index);
  if (it == units_.end() || it->second.id.ordinal != id.ordinal) {
    throw std::out_of_range("unknown or deleted block id: " + to_string(id));
  }
  return it->second.height;
}

std::uint64_t ChainState::height_of_unit(std::uint64_t unit_index) const {
  auto it = units_.find(unit_index);
  if (it == units_.end()) throw std::out_of_range("unknown or deleted unit");
  return it->second.height;
}

double ChainState::mean_height() const {
  if (nonexp_count_ == 0) return 0.0;
  return static_cast<double>(nonexp_height_sum_) / static_cast<double>(nonexp_count_);
}

std::uint64_t ChainState::max_height() const {
  if (height_hist_.empty()) return 0;
  return height_hist_.rbegin()->first;
}

std::optional<Time> ChainState::next_retained_deletion() const {
  std::optional<Time> best;
  for (const auto& [base, g] : groups_) {
    if (!g.expired) continue;
    if (!best || g.deletion < *best) best = g.deletion;
  }
  return best;
}

std::string ChainState::audit() const {
  // Index must hold exactly the heads of non-expired groups.
  size_t nonexpired = 0;
  for (const auto& [base, g] : groups_) {
    if (!g.expired) {
      ++nonexpired;
      auto it = expiration_index_.find({g.expiration, base});
      if (it == expiration_index_.end() || it->second != g.head) {
        return "group " + std::to_string(base) + " missing from expiration index";
      }
    }
    if (g.deletion < g.expiration) {
      return "group " + std::to_string(base) + " deletion before expiration";
    }
  }
  if (nonexpired != expiration_index_.size()) return "expiration index size mismatch";

  for (const auto& [idx, unit] : units_) {
    if (unit.kind == UnitKind::Genesis) continue;
    const bool expired_unit = groups_.at(unit.group).expired;

    // Expiration ordering across groups: parents outlive their children.
    const auto pit = units_.find(unit.eog_parent);
    if (pit != units_.end() && pit->second.group != unit.group &&
        pit->second.kind != UnitKind::Genesis &&
        !(pit->second.expiration_time > unit.expiration_time)) {
      return to_string(unit.id) + " parent expires no later than child";
    }

    if (expired_unit) continue;  // retained units may outlive their referents

    if (pit == units_.end()) {
      return to_string(unit.id) + " non-expired unit with deleted parent";
    }
    if (unit.aog_prev && units_.find(*unit.aog_prev) == units_.end()) {
      return to_string(unit.id) + " non-expired unit with deleted arrival referent";
    }
    // Walk to genesis.
    std::uint64_t cur = idx;
    size_t steps = 0;
    while (cur != 0) {
      auto it = units_.find(cur);
      if (it == units_.end()) return to_string(unit.id) + " broken path to genesis";
      cur = it->second.kind == UnitKind::Genesis ? 0 : it->second.eog_parent;
      if (++steps > units_.size() + 1) return to_string(unit.id) + " cycle in parent chain";
      if (cur == 0) break;
    }
  }
  return "";
}

DeletedGroup ChainState::force_delete_group(std::uint64_t base_index) {
  return remove_group(base_index);
}

void ChainState::tamper_unit(std::uint64_t unit_index, std::uint8_t xor_mask) {
  auto it = units_.find(unit_index);
  if (it == units_.end()) throw std::out_of_range("unknown unit");
  it->second.header.merkle_root[0] ^= xor_mask;
}

}  // namespace litichain
