#include "litichain/crypto.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace litichain {

namespace {

void put_u64_le(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

void put_u32_le(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

std::array<std::uint8_t, BlockHeader::kSerializedSize> BlockHeader::serialize() const {
  std::array<std::uint8_t, kSerializedSize> out{};
  std::uint8_t* p = out.data();
  std::memcpy(p, prev_hash.data(), 32);
  std::memcpy(p + 32, parent_hash.data(), 32);
  std::memcpy(p + 64, merkle_root.data(), 32);
  put_u64_le(p + 96, timestamp_ms);
  put_u32_le(p + 104, difficulty_bits);
  put_u64_le(p + 108, nonce);
  return out;
}

Hash32 BlockHeader::block_hash() const {
  auto bytes = serialize();
  return dsha256(bytes);
}

std::uint64_t quantize_ms(double t) {
  if (!(t >= 0)) return 0;
  return static_cast<std::uint64_t>(std::llround(t * 1000.0));
}

Hash32 merkle_root(std::span<const Bytes> payloads) {
  if (payloads.empty()) return Hash32{};
  std::vector<Hash32> level;
  level.reserve(payloads.size());
  for (const Bytes& p : payloads) level.push_back(sha256(p));
  while (level.size() > 1) {
    std::vector<Hash32> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i < level.size(); i += 2) {
      const Hash32& left = level[i];
      const Hash32& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
      std::array<std::uint8_t, 64> pair{};
      std::memcpy(pair.data(), left.data(), 32);
      std::memcpy(pair.data() + 32, right.data(), 32);
      next.push_back(sha256(pair));
    }
    level = std::move(next);
  }
  return level.front();
}

bool satisfies_pow(const Hash32& hash, std::uint32_t difficulty_bits) {
  return leading_zero_bits(hash) >= difficulty_bits;
}

MineResult mine(BlockHeader header_template, std::uint32_t difficulty_bits) {
  if (difficulty_bits > 256) throw std::invalid_argument("difficulty above digest width");
  header_template.difficulty_bits = difficulty_bits;
  auto bytes = header_template.serialize();
  for (std::uint64_t nonce = 0;; ++nonce) {
    put_u64_le(bytes.data() + 108, nonce);
    Hash32 h = dsha256(bytes);
    if (satisfies_pow(h, difficulty_bits)) {
      return MineResult{nonce, h, nonce + 1};
    }
    if (nonce == UINT64_MAX) break;
  }
  throw std::runtime_error("nonce space exhausted");
}

BlockHeader genesis_header() { return BlockHeader{}; }

Hash32 genesis_hash() {
  static const Hash32 h = genesis_header().block_hash();
  return h;
}

}  // namespace litichain
