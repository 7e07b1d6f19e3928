#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "litichain/crypto.hpp"
#include "litichain/variants.hpp"

namespace litichain {

using Time = double;

constexpr Time kNever = std::numeric_limits<Time>::infinity();

struct BlockId {
  std::uint64_t index = 0;    // global unit counter, genesis = 0, never reused
  std::uint32_t ordinal = 0;  // position inside the logical block group

  bool operator==(const BlockId&) const = default;
};

std::string to_string(const BlockId& id);

struct BlockUnit {
  BlockId id;
  UnitKind kind = UnitKind::Regular;
  std::uint64_t group = 0;  // base_index of the owning group
  Time creation_time = 0;
  Time expiration_time = kNever;
  std::uint64_t eog_parent = 0;  // unit index; intra-group for non-base units
  std::optional<std::uint64_t> aog_prev;
  std::uint64_t height = 0;  // fixed at insertion
  double weight = 1.0;
  BlockHeader header;
  Hash32 hash{};
};

struct BlockGroup {
  std::uint64_t base_index = 0;
  std::vector<std::uint64_t> units;  // unit indices, base first, head last
  std::uint64_t head = 0;
  Time expiration = kNever;
  Time deletion = kNever;  // >= expiration; grows under retention
  bool expired = false;    // expiry processed; excluded from parent selection
};

struct ChainParams {
  VariantSpec variant;
  std::uint64_t K = 50;
  std::uint32_t difficulty = 8;
  bool cascading_retention = false;

  void validate() const;
};

struct RetentionExtension {
  std::uint64_t group = 0;
  Time old_deletion = 0;
  Time new_deletion = 0;
};

struct InsertReport {
  std::uint64_t group = 0;
  std::vector<BlockId> units;
  bool expanded = false;
  bool aog_edge = false;
  std::uint64_t eog_parent_unit = 0;
  std::optional<std::uint64_t> aog_prev_unit;
  std::uint64_t base_height = 0;
  std::uint64_t head_height = 0;
  std::vector<RetentionExtension> extensions;
  std::uint64_t pow_solves = 0;
  std::uint64_t pow_trials = 0;
};

struct DeletedUnit {
  BlockId id;
  double weight = 1.0;
  std::uint64_t height = 0;
};

struct DeletedGroup {
  std::uint64_t base_index = 0;
  Time expiration = 0;
  Time deletion = 0;
  std::vector<DeletedUnit> units;
};

/// The live finite-lifetime DAG. One writer at a time; reads are const.
///
/// Construction rules:
///  - The expiration-order parent of a new block is the head of the
///    non-expired group with the earliest expiration strictly later than the
///    new block's, genesis as fallback; ties go to the earlier arrival.
///  - A logical block expands into mu units when the head of the previously
///    inserted group sits at height <= K; the arrival edge to that head is
///    recorded when additionally mu <= K and the group is still stored, and
///    it extends the referenced group's retention to the new expiration.
///  - Heights are fixed at insertion: base unit 1 + max(parent, arrival
///    referent), each further unit one higher.
///  - Groups are deleted whole once their deletion time passes; expired but
///    retained groups stay stored and are not parent candidates.
class ChainState {
 public:
  explicit ChainState(std::uint32_t genesis_difficulty = 0);

  /// Head unit of the group with the earliest expiration strictly later than
  /// e_new; genesis when none qualifies.
  std::uint64_t select_eog_parent(Time e_new) const;

  InsertReport insert_block(const ChainParams& params, Time t_new, double lifetime);

  /// Marks groups expired and removes groups whose deletion time has passed,
  /// in (time, arrival) order; advances the clock.
  std::vector<DeletedGroup> expire_and_delete(Time now);

  std::uint64_t height_of(const BlockId& id) const;  // throws std::out_of_range
  std::uint64_t height_of_unit(std::uint64_t unit_index) const;

  const std::unordered_map<std::uint64_t, BlockUnit>& units() const { return units_; }
  const std::map<std::uint64_t, BlockGroup>& groups() const { return groups_; }
  const std::map<std::pair<Time, std::uint64_t>, std::uint64_t>& expiration_index() const {
    return expiration_index_;
  }
  Time clock() const { return clock_; }
  std::uint64_t last_inserted_head() const { return last_head_unit_; }
  std::uint64_t last_inserted_group() const { return last_group_; }
  std::uint64_t next_logical_index() const { return next_group_; }

  std::uint64_t pow_solves() const { return pow_solves_; }
  std::uint64_t pow_trials() const { return pow_trials_; }

  // Aggregates over alive, non-expired units (genesis included).
  std::uint64_t tracked_units() const { return nonexp_count_; }
  double mean_height() const;
  std::uint64_t max_height() const;

  /// Earliest pending deletion time of an expired-but-retained group, if any.
  std::optional<Time> next_retained_deletion() const;

  // Structural audits; return a human-readable violation or empty string.
  std::string audit() const;

  // Fault-injection hooks for verification tests: bypass retention / corrupt
  // a stored header without recomputing its hash.
  DeletedGroup force_delete_group(std::uint64_t base_index);
  void tamper_unit(std::uint64_t unit_index, std::uint8_t xor_mask = 0x01);

 private:
  void track_insert_heights(const BlockGroup& g);
  void track_expire_heights(const BlockGroup& g);
  DeletedGroup remove_group(std::uint64_t base_index);

  std::unordered_map<std::uint64_t, BlockUnit> units_;
  std::map<std::uint64_t, BlockGroup> groups_;  // excludes genesis pseudo-group
  std::map<std::pair<Time, std::uint64_t>, std::uint64_t> expiration_index_;
  std::priority_queue<std::pair<Time, std::uint64_t>,
                      std::vector<std::pair<Time, std::uint64_t>>,
                      std::greater<>>
      deletion_queue_;

  Time clock_ = 0;
  std::uint64_t next_unit_ = 1;
  std::uint64_t next_group_ = 1;
  std::uint64_t last_group_ = 0;       // 0 = genesis
  std::uint64_t last_head_unit_ = 0;   // unit index
  std::uint64_t last_head_height_ = 0;

  std::uint64_t pow_solves_ = 0;
  std::uint64_t pow_trials_ = 0;

  std::uint64_t nonexp_count_ = 0;
  std::uint64_t nonexp_height_sum_ = 0;
  std::map<std::uint64_t, std::uint32_t> height_hist_;
};

}  // namespace litichain
