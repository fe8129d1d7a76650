#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "probqsar/errors.hpp"

namespace probqsar::dataio {

// Little-endian byte serialization. Doubles travel as their IEEE-754 bit
// pattern, so round-trips are bitwise exact.
class ByteWriter {
public:
  void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(uint16_t v) { le(v, 2); }
  void u32(uint32_t v) { le(v, 4); }
  void u64(uint64_t v) { le(v, 8); }
  void i64(int64_t v) { le(static_cast<uint64_t>(v), 8); }
  void f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
  }
  void bytes(const void *data, size_t n) {
    buf_.append(static_cast<const char *>(data), n);
  }
  // length-prefixed string (u32 length)
  void str(std::string_view s) {
    u32(static_cast<uint32_t>(s.size()));
    buf_.append(s);
  }

  const std::string &data() const { return buf_; }
  std::string take() { return std::move(buf_); }

private:
  void le(uint64_t v, int n) {
    for (int i = 0; i < n; ++i) {
      buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  }
  std::string buf_;
};

class ByteReader {
public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  uint8_t u8() { return static_cast<uint8_t>(take(1)[0]); }
  uint16_t u16() { return static_cast<uint16_t>(le(2)); }
  uint32_t u32() { return static_cast<uint32_t>(le(4)); }
  uint64_t u64() { return le(8); }
  int64_t i64() { return static_cast<int64_t>(le(8)); }
  double f64() {
    uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str() {
    uint32_t n = u32();
    return std::string(take(n));
  }
  std::string_view raw(size_t n) { return take(n); }

  bool exhausted() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

private:
  std::string_view take(size_t n) {
    if (pos_ + n > data_.size()) {
      throw CorruptFile("truncated data: wanted " + std::to_string(n) +
                        " bytes, " + std::to_string(data_.size() - pos_) +
                        " left");
    }
    std::string_view out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  uint64_t le(int n) {
    std::string_view b = take(static_cast<size_t>(n));
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<uint64_t>(static_cast<uint8_t>(b[i])) << (8 * i);
    }
    return v;
  }

  std::string_view data_;
  size_t pos_ = 0;
};

// Whole-file helpers; writes go through a temp file + rename.
std::string read_file(const std::string &path);
void write_file_atomic(const std::string &path, std::string_view contents);

}  // namespace probqsar::dataio
