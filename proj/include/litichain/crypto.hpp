#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "litichain/hash.hpp"

namespace litichain {

/// Fixed-layout block header.
///
/// Serialized form, 116 bytes total:
///   prev_hash(32) | parent_hash(32) | merkle_root(32) |
///   timestamp_ms(u64 LE) | difficulty_bits(u32 LE) | nonce(u64 LE)
///
/// prev_hash carries the arrival-edge referent's blockhash (all zero when the
/// block has no arrival edge); parent_hash carries the expiration-order
/// parent's blockhash. The blockhash is the double SHA-256 of these bytes.
struct BlockHeader {
  Hash32 prev_hash{};
  Hash32 parent_hash{};
  Hash32 merkle_root{};
  std::uint64_t timestamp_ms = 0;
  std::uint32_t difficulty_bits = 0;
  std::uint64_t nonce = 0;

  static constexpr size_t kSerializedSize = 116;

  std::array<std::uint8_t, kSerializedSize> serialize() const;
  Hash32 block_hash() const;

  bool operator==(const BlockHeader&) const = default;
};

/// Simulation time quantized to milliseconds for header serialization.
std::uint64_t quantize_ms(double t);

/// Merkle root over payload byte strings. Leaves are SHA-256 of each payload,
/// interior nodes SHA-256(left || right), odd nodes duplicated. Empty input
/// yields the all-zero root.
Hash32 merkle_root(std::span<const Bytes> payloads);

struct MineResult {
  std::uint64_t nonce = 0;
  Hash32 hash{};
  std::uint64_t trials = 0;  // nonce + 1
};

/// Smallest nonce (from 0) whose double-SHA-256 header hash carries at least
/// `difficulty_bits` leading zero bits. Counts as one PoW solve regardless of
/// trial count.
MineResult mine(BlockHeader header_template, std::uint32_t difficulty_bits);

bool satisfies_pow(const Hash32& hash, std::uint32_t difficulty_bits);

/// All-zero header; its double SHA-256 is the fixed genesis blockhash.
BlockHeader genesis_header();
Hash32 genesis_hash();

}  // namespace litichain
