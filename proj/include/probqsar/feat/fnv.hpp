#pragma once

#include <cstdint>
#include <cstring>
#include <string_view>

namespace probqsar::feat {

// 64-bit FNV-1a. All multi-byte fields are fed little-endian so hashes are
// identical on every platform. This is the only hash used for fingerprint
// identifiers and file checksums.
class Fnv1a {
public:
  static constexpr uint64_t kOffsetBasis = 0xcbf29ce484222325ULL;
  static constexpr uint64_t kPrime = 0x100000001b3ULL;

  Fnv1a &update_byte(uint8_t b) {
    hash_ ^= b;
    hash_ *= kPrime;
    return *this;
  }

  Fnv1a &update_u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      update_byte(static_cast<uint8_t>(v >> (8 * i)));
    }
    return *this;
  }

  Fnv1a &update_i64(int64_t v) {
    return update_u64(static_cast<uint64_t>(v));
  }

  Fnv1a &update_bytes(const void *data, size_t n) {
    const auto *p = static_cast<const uint8_t *>(data);
    for (size_t i = 0; i < n; ++i) {
      update_byte(p[i]);
    }
    return *this;
  }

  Fnv1a &update_string(std::string_view s) {
    return update_bytes(s.data(), s.size());
  }

  uint64_t digest() const { return hash_; }

private:
  uint64_t hash_ = kOffsetBasis;
};

inline uint64_t fnv1a_bytes(const void *data, size_t n) {
  return Fnv1a().update_bytes(data, n).digest();
}

}  // namespace probqsar::feat
