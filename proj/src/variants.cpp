#include "litichain/variants.hpp"

#include <stdexcept>

namespace litichain {

std::string to_string(VariantKind v) {
  switch (v) {
    case VariantKind::Plain: return "plain";
    case VariantKind::PVariant: return "p";
    case VariantKind::SVariant: return "s";
  }
  return "?";
}

VariantKind variant_from_string(const std::string& s) {
  if (s == "plain") return VariantKind::Plain;
  if (s == "p") return VariantKind::PVariant;
  if (s == "s") return VariantKind::SVariant;
  throw std::invalid_argument("unknown variant: " + s);
}

void VariantSpec::validate() const {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (kind == VariantKind::Plain && mu != 1) {
    throw std::invalid_argument("plain variant forces mu = 1");
  }
  if (!(lwb_weight > 0.0 && lwb_weight <= 1.0)) {
    throw std::invalid_argument("lwb weight must be in (0, 1]");
  }
}

double BlockPlan::total_weight() const {
  double w = 0.0;
  for (const auto& u : units) w += u.weight;
  return w;
}

BlockPlan plan_block(const VariantSpec& variant, std::uint64_t gate_height, std::uint64_t K,
                     std::vector<Bytes> payload) {
  variant.validate();
  BlockPlan plan;
  plan.expanded = gate_height <= K;
  plan.aog_edge = plan.expanded && variant.mu <= K;

  if (!plan.expanded || variant.kind == VariantKind::Plain) {
    plan.units.push_back(PlannedUnit{UnitKind::Regular, 1.0, std::move(payload)});
    return plan;
  }

  const std::uint64_t mu = variant.mu;
  if (variant.kind == VariantKind::SVariant) {
    plan.units.resize(mu);
    for (std::uint64_t j = 0; j < mu; ++j) {
      plan.units[j].kind = UnitKind::SubBlock;
      plan.units[j].weight = 1.0 / static_cast<double>(mu);
    }
    // round-robin split keeps total payload bytes conserved
    for (size_t i = 0; i < payload.size(); ++i) {
      plan.units[i % mu].payload.push_back(std::move(payload[i]));
    }
  } else {
    plan.units.push_back(PlannedUnit{UnitKind::Regular, 1.0, std::move(payload)});
    std::vector<Bytes> lwb_payload(variant.lwb_tx_count);
    for (std::uint64_t j = 1; j < mu; ++j) {
      plan.units.push_back(PlannedUnit{UnitKind::Lwb, variant.lwb_weight, lwb_payload});
    }
  }
  return plan;
}

}  // namespace litichain
