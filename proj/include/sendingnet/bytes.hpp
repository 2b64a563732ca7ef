#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sn {

using Bytes = std::vector<uint8_t>;

inline std::string to_hex(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

inline Bytes from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

/// Append-only builder for the canonical wire encodings. Multi-byte integers
/// are big-endian; variable-length fields carry a 4-byte length prefix.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u32(uint32_t v) {
        for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

    void raw(const Bytes& data) { raw(std::span<const uint8_t>(data)); }

    template <size_t N>
    void raw(const std::array<uint8_t, N>& data) {
        raw(std::span<const uint8_t>(data.data(), N));
    }

    void prefixed(std::span<const uint8_t> data) {
        u32(static_cast<uint32_t>(data.size()));
        raw(data);
    }

    void prefixed(const Bytes& data) { prefixed(std::span<const uint8_t>(data)); }

    void str(const std::string& s) {
        prefixed(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

/// Cursor over a canonical encoding; throws std::out_of_range on truncation.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() { return take(1)[0]; }

    uint32_t u32() {
        auto s = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | s[i];
        return v;
    }

    uint64_t u64() {
        auto s = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | s[i];
        return v;
    }

    Bytes raw(size_t n) {
        auto s = take(n);
        return Bytes(s.begin(), s.end());
    }

    template <size_t N>
    std::array<uint8_t, N> fixed() {
        auto s = take(N);
        std::array<uint8_t, N> out{};
        std::memcpy(out.data(), s.data(), N);
        return out;
    }

    Bytes prefixed() {
        uint32_t n = u32();
        return raw(n);
    }

    std::string str() {
        Bytes b = prefixed();
        return std::string(b.begin(), b.end());
    }

    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    std::span<const uint8_t> take(size_t n) {
        if (pos_ + n > data_.size()) throw std::out_of_range("byte reader truncated");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

}  // namespace sn
