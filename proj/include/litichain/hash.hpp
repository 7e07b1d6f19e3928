#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace litichain {

using Hash32 = std::array<std::uint8_t, 32>;
using Bytes = std::vector<std::uint8_t>;

Hash32 sha256(std::span<const std::uint8_t> data);

/// Double SHA-256 (hash of the hash), the block-hash primitive.
Hash32 dsha256(std::span<const std::uint8_t> data);

/// Number of leading zero bits of a digest, scanning from byte 0, MSB first.
unsigned leading_zero_bits(const Hash32& h);

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(const std::string& hex);

/// Incremental SHA-256, used for event-log digests.
class Sha256Stream {
 public:
  Sha256Stream();
  Sha256Stream(const Sha256Stream&) = delete;
  Sha256Stream& operator=(const Sha256Stream&) = delete;
  ~Sha256Stream();

  void update(std::span<const std::uint8_t> data);
  void update(const std::string& s);
  Hash32 finish();

 private:
  void* ctx_;
};

inline Hash32 sha256(const std::string& s) {
  return sha256(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

}  // namespace litichain
