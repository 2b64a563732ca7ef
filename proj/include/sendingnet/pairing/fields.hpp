#pragma once

#include "sendingnet/pairing/prime_field.hpp"

namespace sn::bn {

// BN254 (alt_bn128). Base field prime p and subgroup order r, with
// p = 36x^4 + 36x^3 + 24x^2 + 6x + 1 for x = 4965661367192848881.
inline constexpr u64 kBnParamX = 4965661367192848881ULL;

inline constexpr U256 kBaseModulus{{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                    0xb85045b68181585dULL, 0x30644e72e131a029ULL}};
inline constexpr U256 kScalarModulus{{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                      0xb85045b68181585dULL, 0x30644e72e131a029ULL}};

inline constexpr FieldSpec kBaseSpec = make_field_spec(kBaseModulus);
inline constexpr FieldSpec kScalarSpec = make_field_spec(kScalarModulus);

// G2 generator affine coordinates (x = xc0 + xc1 u, y = yc0 + yc1 u).
inline constexpr U256 kG2GenXc0{{0x46debd5cd992f6edULL, 0x674322d4f75edaddULL,
                                 0x426a00665e5c4479ULL, 0x1800deef121f1e76ULL}};
inline constexpr U256 kG2GenXc1{{0x97e485b7aef312c2ULL, 0xf1aa493335a9e712ULL,
                                 0x7260bfb731fb5d25ULL, 0x198e9393920d483aULL}};
inline constexpr U256 kG2GenYc0{{0x4ce6cc0166fa7daaULL, 0xe3d1e7690c43d37bULL,
                                 0x4aab71808dcb408fULL, 0x12c85ea5db8c6debULL}};
inline constexpr U256 kG2GenYc1{{0x55acdadcd122975bULL, 0xbc4b313370b38ef3ULL,
                                 0xec9e99ad690c3395ULL, 0x090689d0585ff075ULL}};

using Fp = MontField<kBaseSpec>;
using Fr = MontField<kScalarSpec>;

// ---------------------------------------------------------------------------
// Fp2 = Fp[u] / (u^2 + 1)

struct Fp2 {
    Fp c0, c1;

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp2 operator-() const { return {-c0, -c1}; }

    Fp2 operator*(const Fp2& o) const {
        // Karatsuba over u^2 = -1
        Fp v0 = c0 * o.c0;
        Fp v1 = c1 * o.c1;
        Fp mid = (c0 + c1) * (o.c0 + o.c1);
        return {v0 - v1, mid - v0 - v1};
    }

    Fp2 square() const {
        Fp a = c0 + c1;
        Fp b = c0 - c1;
        Fp ab = c0 * c1;
        return {a * b, ab + ab};
    }

    Fp2 dbl() const { return {c0 + c0, c1 + c1}; }

    Fp2 conjugate() const { return {c0, -c1}; }

    Fp2 scale(const Fp& s) const { return {c0 * s, c1 * s}; }

    Fp2 inverse() const {
        Fp norm = c0 * c0 + c1 * c1;
        Fp inv = norm.inverse();
        return {c0 * inv, -(c1 * inv)};
    }

    Fp2 pow(const U256& e) const {
        Fp2 acc = one();
        Fp2 base = *this;
        for (int i = u256_bit_length(e) - 1; i >= 0; --i) {
            acc = acc.square();
            if (u256_bit(e, i)) acc = acc * base;
        }
        return acc;
    }

    /// Multiplication by the sextic non-residue xi = 9 + u.
    Fp2 mul_by_xi() const {
        Fp nine_c0 = c0.dbl().dbl().dbl() + c0;
        Fp nine_c1 = c1.dbl().dbl().dbl() + c1;
        return {nine_c0 - c1, nine_c1 + c0};
    }
};

/// xi = 9 + u, the non-residue the Fp6/Fp12 tower is built on.
inline Fp2 fp2_xi() { return {Fp::from_u64(9), Fp::one()}; }

// ---------------------------------------------------------------------------
// Fp6 = Fp2[v] / (v^3 - xi)

struct Fp6 {
    Fp2 c0, c1, c2;

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Fp6& o) const { return !(*this == o); }

    Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }

    Fp6 operator*(const Fp6& o) const {
        Fp2 a0 = c0 * o.c0;
        Fp2 a1 = c1 * o.c1;
        Fp2 a2 = c2 * o.c2;
        Fp2 t0 = a0 + ((c1 + c2) * (o.c1 + o.c2) - a1 - a2).mul_by_xi();
        Fp2 t1 = (c0 + c1) * (o.c0 + o.c1) - a0 - a1 + a2.mul_by_xi();
        Fp2 t2 = (c0 + c2) * (o.c0 + o.c2) - a0 - a2 + a1;
        return {t0, t1, t2};
    }

    Fp6 square() const { return *this * *this; }

    /// Multiplication by v (shifts coefficients, wrapping through xi).
    Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

    Fp6 scale(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

    Fp6 inverse() const {
        Fp2 t0 = c0.square() - (c1 * c2).mul_by_xi();
        Fp2 t1 = c2.square().mul_by_xi() - c0 * c1;
        Fp2 t2 = c1.square() - c0 * c2;
        Fp2 denom = c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi();
        Fp2 inv = denom.inverse();
        return {t0 * inv, t1 * inv, t2 * inv};
    }
};

// ---------------------------------------------------------------------------
// Fp12 = Fp6[w] / (w^2 - v)

struct Fp12 {
    Fp6 c0, c1;

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_one() const { return *this == one(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp12& o) const { return !(*this == o); }

    Fp12 operator*(const Fp12& o) const {
        Fp6 a0 = c0 * o.c0;
        Fp6 a1 = c1 * o.c1;
        Fp6 mid = (c0 + c1) * (o.c0 + o.c1);
        return {a0 + a1.mul_by_v(), mid - a0 - a1};
    }

    Fp12 square() const {
        Fp6 ab = c0 * c1;
        Fp6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - ab - ab.mul_by_v(), ab + ab};
    }

    /// Conjugation over Fp6 = the p^6 Frobenius.
    Fp12 conjugate() const { return {c0, -c1}; }

    Fp12 inverse() const {
        Fp6 denom = c0.square() - c1.square().mul_by_v();
        Fp6 inv = denom.inverse();
        return {c0 * inv, -(c1 * inv)};
    }

    Fp12 pow(const U256& e) const {
        Fp12 acc = one();
        for (int i = u256_bit_length(e) - 1; i >= 0; --i) {
            acc = acc.square();
            if (u256_bit(e, i)) acc = acc * *this;
        }
        return acc;
    }

    /// Frobenius endomorphism x -> x^p. Coefficient table built on first use.
    Fp12 frobenius() const;
};

/// gamma_k = xi^(k (p-1) / 6) for k in [0, 6); the Fp12 Frobenius twists the
/// w^k basis coefficient by gamma_k.
const std::array<Fp2, 6>& frobenius_gamma();

inline Fp12 Fp12::frobenius() const {
    const auto& g = frobenius_gamma();
    // Basis order w^k for k = 2i + j over coefficients c_{j,i} (c_j is Fp6 over v^i).
    Fp2 a0 = c0.c0.conjugate();                    // w^0
    Fp2 a1 = c0.c1.conjugate() * g[2];             // v   = w^2
    Fp2 a2 = c0.c2.conjugate() * g[4];             // v^2 = w^4
    Fp2 b0 = c1.c0.conjugate() * g[1];             // w
    Fp2 b1 = c1.c1.conjugate() * g[3];             // v w = w^3
    Fp2 b2 = c1.c2.conjugate() * g[5];             // v^2 w = w^5
    return {{a0, a1, a2}, {b0, b1, b2}};
}

}  // namespace sn::bn
