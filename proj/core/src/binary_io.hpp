#pragma once

// Little-endian / LEB128 encoding helpers shared by the trie and the GLEX
// container. Readers throw CorruptFile on any overrun or malformed field.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grlex/error.hpp"
#include "grlex/utf8.hpp"

namespace grlex::detail {

class ByteWriter {
 public:
  void u8(uint8_t v) { bytes_.push_back(v); }

  void u16(uint16_t v) {
    u8(static_cast<uint8_t>(v));
    u8(static_cast<uint8_t>(v >> 8));
  }

  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<uint8_t>(v >> (8 * i)));
  }

  void varint(uint64_t v) {
    while (v >= 0x80) {
      u8(static_cast<uint8_t>(v | 0x80));
      v >>= 7;
    }
    u8(static_cast<uint8_t>(v));
  }

  void raw(std::span<const uint8_t> data) { bytes_.insert(bytes_.end(), data.begin(), data.end()); }

  void raw(std::string_view data) { bytes_.insert(bytes_.end(), data.begin(), data.end()); }

  void str(std::string_view s) {
    varint(s.size());
    raw(s);
  }

  void ustr(std::u32string_view s) { str(to_utf8(s)); }

  std::vector<uint8_t>& bytes() { return bytes_; }
  size_t size() const { return bytes_.size(); }

 private:
  std::vector<uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data, std::string_view what = "stream")
      : data_(data), what_(what) {}

  uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  uint16_t u16() {
    const uint16_t lo = u8();
    return static_cast<uint16_t>(lo | (static_cast<uint16_t>(u8()) << 8));
  }

  uint32_t u32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(u8()) << (8 * i);
    return v;
  }

  uint64_t varint() {
    uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const uint8_t b = u8();
      v |= static_cast<uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
    }
    fail("varint too long");
  }

  /// Varint bounded by `limit`; guards allocation sizes.
  size_t count(size_t limit) {
    const uint64_t v = varint();
    if (v > limit) fail("count out of range");
    return static_cast<size_t>(v);
  }

  std::span<const uint8_t> raw(size_t n) {
    need(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::string str() {
    const size_t n = count(remaining());
    auto bytes = raw(n);
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
  }

  std::u32string ustr() {
    try {
      return to_utf32(str());
    } catch (const EncodingError&) {
      fail("invalid UTF-8 string");
    }
  }

  size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

  [[noreturn]] void fail(std::string_view why) const {
    throw CorruptFile(std::string(what_) + ": " + std::string(why) + " at byte " +
                      std::to_string(pos_));
  }

 private:
  void need(size_t n) const {
    if (remaining() < n) fail("unexpected end of data");
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  std::string what_;
};

}  // namespace grlex::detail
