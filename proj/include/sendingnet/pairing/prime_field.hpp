#pragma once

#include <array>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>

#include "sendingnet/pairing/limbs.hpp"

namespace sn::bn {

/// Compile-time Montgomery parameters for an odd modulus < 2^255.
struct FieldSpec {
    U256 modulus;
    U256 r1;    // R mod n, the Montgomery representation of 1
    U256 r2;    // R^2 mod n, for conversion into Montgomery form
    u64 ninv;   // -n^{-1} mod 2^64
};

consteval FieldSpec make_field_spec(U256 modulus) {
    FieldSpec spec{};
    spec.modulus = modulus;

    // Newton iteration for n^{-1} mod 2^64; six steps double the precision
    // from the seed (exact mod 2).
    u64 inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - modulus.w[0] * inv;
    spec.ninv = ~inv + 1;

    // R mod n by 256 modular doublings of 1; R^2 mod n = (R mod n) * 2^256
    // mod n, i.e. 256 more doublings.
    U256 acc{{1, 0, 0, 0}};
    for (int i = 0; i < 256; ++i) acc = u256_double_mod(acc, modulus);
    spec.r1 = acc;
    for (int i = 0; i < 256; ++i) acc = u256_double_mod(acc, modulus);
    spec.r2 = acc;
    return spec;
}

/// Prime field element in Montgomery form. All operations are
/// branch-complete value semantics; nothing here is constant-time.
template <const FieldSpec& S>
class MontField {
public:
    constexpr MontField() : v_(u256_zero()) {}

    static constexpr MontField zero() { return MontField(); }
    static constexpr MontField one() { return from_mont(S.r1); }

    static MontField from_u64(u64 x) {
        MontField out;
        out.v_ = mont_mul(U256{{x, 0, 0, 0}}, S.r2);
        return out;
    }

    /// Interprets the value mod n (input need not be reduced).
    static MontField from_u256(const U256& x) {
        U256 t = x;
        while (u256_cmp(t, S.modulus) >= 0) {
            U256 d{};
            u256_sub(d, t, S.modulus);
            t = d;
        }
        MontField out;
        out.v_ = mont_mul(t, S.r2);
        return out;
    }

    /// Strict: rejects inputs >= modulus.
    static std::optional<MontField> from_u256_checked(const U256& x) {
        if (u256_cmp(x, S.modulus) >= 0) return std::nullopt;
        MontField out;
        out.v_ = mont_mul(x, S.r2);
        return out;
    }

    U256 to_u256() const { return mont_mul(v_, U256{{1, 0, 0, 0}}); }

    static constexpr const U256& modulus() { return S.modulus; }

    bool is_zero() const { return u256_is_zero(v_); }

    bool operator==(const MontField& o) const { return u256_cmp(v_, o.v_) == 0; }
    bool operator!=(const MontField& o) const { return !(*this == o); }

    MontField operator+(const MontField& o) const {
        MontField out;
        u64 carry = u256_add(out.v_, v_, o.v_);
        out.v_ = u256_mod_reduce_once(out.v_, carry, S.modulus);
        return out;
    }

    MontField operator-(const MontField& o) const {
        MontField out;
        u64 borrow = u256_sub(out.v_, v_, o.v_);
        if (borrow) {
            U256 t{};
            u256_add(t, out.v_, S.modulus);
            out.v_ = t;
        }
        return out;
    }

    MontField operator-() const {
        if (is_zero()) return *this;
        MontField out;
        u256_sub(out.v_, S.modulus, v_);
        return out;
    }

    MontField operator*(const MontField& o) const {
        MontField out;
        out.v_ = mont_mul(v_, o.v_);
        return out;
    }

    MontField& operator+=(const MontField& o) { return *this = *this + o; }
    MontField& operator-=(const MontField& o) { return *this = *this - o; }
    MontField& operator*=(const MontField& o) { return *this = *this * o; }

    MontField square() const { return *this * *this; }

    MontField dbl() const { return *this + *this; }

    MontField pow(const U256& e) const {
        MontField base = *this;
        MontField acc = one();
        int bits = u256_bit_length(e);
        for (int i = bits - 1; i >= 0; --i) {
            acc = acc.square();
            if (u256_bit(e, i)) acc = acc * base;
        }
        return acc;
    }

    /// Fermat inverse; inverse of zero is zero (callers guard).
    MontField inverse() const {
        U256 e{};
        u256_sub(e, S.modulus, U256{{2, 0, 0, 0}});
        return pow(e);
    }

    /// Square root for moduli = 3 mod 4 via the (n+1)/4 exponent.
    std::optional<MontField> sqrt() const {
        static_assert((S.modulus.w[0] & 3) == 3, "sqrt shortcut needs n = 3 mod 4");
        U256 e{};
        u256_add(e, S.modulus, U256{{1, 0, 0, 0}});
        // divide by 4
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < 4; ++i) {
                e.w[i] >>= 1;
                if (i < 3) e.w[i] |= e.w[i + 1] << 63;
            }
        }
        MontField cand = pow(e);
        if (cand.square() == *this) return cand;
        return std::nullopt;
    }

    /// Big-endian canonical 32 bytes.
    std::array<uint8_t, 32> to_bytes() const {
        U256 n = to_u256();
        std::array<uint8_t, 32> out{};
        for (int i = 0; i < 4; ++i) {
            u64 limb = n.w[3 - i];
            for (int b = 0; b < 8; ++b) out[i * 8 + b] = static_cast<uint8_t>(limb >> (56 - 8 * b));
        }
        return out;
    }

    static std::optional<MontField> from_bytes(std::span<const uint8_t> in) {
        if (in.size() != 32) return std::nullopt;
        U256 n{};
        for (int i = 0; i < 4; ++i) {
            u64 limb = 0;
            for (int b = 0; b < 8; ++b) limb = (limb << 8) | in[i * 8 + b];
            n.w[3 - i] = limb;
        }
        return from_u256_checked(n);
    }

    /// True when the canonical representative is odd (serialization parity bit).
    bool is_odd() const { return to_u256().w[0] & 1; }

    const U256& mont_limbs() const { return v_; }

private:
    static constexpr MontField from_mont(const U256& m) {
        MontField out;
        out.v_ = m;
        return out;
    }

    /// CIOS Montgomery multiplication: a * b * R^{-1} mod n.
    static constexpr U256 mont_mul(const U256& a, const U256& b) {
        u64 t[6] = {0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            u64 carry = 0;
            for (int j = 0; j < 4; ++j) {
                u128 s = (u128)a.w[i] * b.w[j] + t[j] + carry;
                t[j] = (u64)s;
                carry = (u64)(s >> 64);
            }
            u128 s = (u128)t[4] + carry;
            t[4] = (u64)s;
            t[5] = (u64)(s >> 64);

            u64 m = t[0] * S.ninv;
            s = (u128)m * S.modulus.w[0] + t[0];
            carry = (u64)(s >> 64);
            for (int j = 1; j < 4; ++j) {
                s = (u128)m * S.modulus.w[j] + t[j] + carry;
                t[j - 1] = (u64)s;
                carry = (u64)(s >> 64);
            }
            s = (u128)t[4] + carry;
            t[3] = (u64)s;
            t[4] = t[5] + (u64)(s >> 64);
            t[5] = 0;
        }
        U256 out{{t[0], t[1], t[2], t[3]}};
        if (t[4] != 0 || u256_cmp(out, S.modulus) >= 0) {
            U256 d{};
            u256_sub(d, out, S.modulus);
            out = d;
        }
        return out;
    }

    U256 v_;
};

}  // namespace sn::bn
