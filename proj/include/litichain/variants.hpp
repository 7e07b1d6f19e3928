#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "litichain/hash.hpp"

namespace litichain {

enum class VariantKind { Plain, PVariant, SVariant };

enum class UnitKind { Genesis, Regular, SubBlock, Lwb };

std::string to_string(VariantKind v);
VariantKind variant_from_string(const std::string& s);

/// Block-expansion policy. Plain chains force mu = 1. An s-variant block
/// splits into mu sub-blocks of weight 1/mu; a p-variant block is one regular
/// block plus mu-1 lightweight blocks of weight lwb_weight each.
struct VariantSpec {
  VariantKind kind = VariantKind::Plain;
  std::uint64_t mu = 1;
  double lwb_weight = 0.01;
  std::uint32_t lwb_tx_count = 10;  // empty transactions carried by each LWB

  void validate() const;  // throws std::invalid_argument
};

struct PlannedUnit {
  UnitKind kind;
  double weight;
  std::vector<Bytes> payload;
};

struct BlockPlan {
  std::vector<PlannedUnit> units;
  bool expanded = false;
  bool aog_edge = false;

  double total_weight() const;
};

/// Pure insertion plan: expands the logical block when the gating head height
/// is at most K, and requests an arrival edge when additionally mu <= K.
/// Payloads are split round-robin across sub-blocks for the s-variant; the
/// p-variant keeps the payload in the regular unit and pads LWBs with empty
/// transactions.
BlockPlan plan_block(const VariantSpec& variant, std::uint64_t gate_height, std::uint64_t K,
                     std::vector<Bytes> payload);

}  // namespace litichain
