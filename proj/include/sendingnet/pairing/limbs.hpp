#pragma once

#include <array>
#include <cstdint>

namespace sn::bn {

using u64 = uint64_t;
using u128 = unsigned __int128;

/// 256-bit unsigned integer, little-endian limb order.
struct U256 {
    u64 w[4];

    constexpr bool operator==(const U256&) const = default;
};

constexpr U256 u256_zero() { return U256{{0, 0, 0, 0}}; }

constexpr bool u256_is_zero(const U256& a) { return a.w[0] == 0 && a.w[1] == 0 && a.w[2] == 0 && a.w[3] == 0; }

/// -1, 0, 1 as a < b, a == b, a > b.
constexpr int u256_cmp(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.w[i] < b.w[i]) return -1;
        if (a.w[i] > b.w[i]) return 1;
    }
    return 0;
}

/// a + b, returning the carry-out bit.
constexpr u64 u256_add(U256& out, const U256& a, const U256& b) {
    u128 c = 0;
    for (int i = 0; i < 4; ++i) {
        u128 s = (u128)a.w[i] + b.w[i] + c;
        out.w[i] = (u64)s;
        c = s >> 64;
    }
    return (u64)c;
}

/// a - b, returning the borrow-out bit.
constexpr u64 u256_sub(U256& out, const U256& a, const U256& b) {
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = (u128)a.w[i] - b.w[i] - borrow;
        out.w[i] = (u64)d;
        borrow = (d >> 64) & 1;
    }
    return (u64)borrow;
}

constexpr bool u256_bit(const U256& a, int i) { return (a.w[i >> 6] >> (i & 63)) & 1; }

constexpr int u256_bit_length(const U256& a) {
    for (int i = 255; i >= 0; --i) {
        if (u256_bit(a, i)) return i + 1;
    }
    return 0;
}

/// a mod m with a < 2m (single conditional subtract).
constexpr U256 u256_mod_reduce_once(const U256& a, u64 extra_bit, const U256& m) {
    U256 out = a;
    if (extra_bit != 0 || u256_cmp(out, m) >= 0) {
        U256 t{};
        u256_sub(t, out, m);
        out = t;
    }
    return out;
}

/// (a * 2) mod m, assuming a < m.
constexpr U256 u256_double_mod(const U256& a, const U256& m) {
    U256 d{};
    u64 carry = u256_add(d, a, a);
    return u256_mod_reduce_once(d, carry, m);
}

/// Quotient of a / d for small divisors; remainder discarded by callers that
/// know d divides a.
constexpr U256 u256_div_u64(const U256& a, u64 d) {
    U256 q{};
    u128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        u128 cur = (rem << 64) | a.w[i];
        q.w[i] = (u64)(cur / d);
        rem = cur % d;
    }
    return q;
}

}  // namespace sn::bn
