#include "litichain/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace litichain {

Hash32 sha256(std::span<const std::uint8_t> data) {
  Hash32 out{};
  unsigned len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("sha256 failed");
  }
  return out;
}

Hash32 dsha256(std::span<const std::uint8_t> data) {
  Hash32 first = sha256(data);
  return sha256(std::span<const std::uint8_t>(first.data(), first.size()));
}

unsigned leading_zero_bits(const Hash32& h) {
  unsigned n = 0;
  for (std::uint8_t byte : h) {
    if (byte == 0) {
      n += 8;
      continue;
    }
    for (int k = 7; k >= 0; --k) {
      if ((byte >> k) & 1) return n;
      ++n;
    }
  }
  return n;
}

std::string to_hex(std::span<const std::uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

Bytes from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

Sha256Stream::Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
  if (!ctx_ || EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 stream init failed");
  }
}

Sha256Stream::~Sha256Stream() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256Stream::update(std::span<const std::uint8_t> data) {
  if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size()) != 1) {
    throw std::runtime_error("sha256 stream update failed");
  }
}

void Sha256Stream::update(const std::string& s) {
  update(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

Hash32 Sha256Stream::finish() {
  Hash32 out{};
  unsigned len = 0;
  if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len) != 1 || len != 32) {
    throw std::runtime_error("sha256 stream finish failed");
  }
  return out;
}

}  // namespace litichain
