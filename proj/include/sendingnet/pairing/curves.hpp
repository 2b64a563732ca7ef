#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sendingnet/pairing/fields.hpp"

namespace sn::bn {

// ---------------------------------------------------------------------------
// G1: y^2 = x^3 + 3 over Fp, prime order r (cofactor 1). Jacobian coordinates,
// Z = 0 encodes the identity.

struct G1 {
    Fp X, Y, Z;

    static G1 identity() { return {Fp::one(), Fp::one(), Fp::zero()}; }
    static G1 generator() { return {Fp::from_u64(1), Fp::from_u64(2), Fp::one()}; }

    bool is_identity() const { return Z.is_zero(); }

    static G1 from_affine(const Fp& x, const Fp& y) { return {x, y, Fp::one()}; }

    /// Affine (x, y); callers must not pass the identity.
    std::pair<Fp, Fp> to_affine() const;

    bool operator==(const G1& o) const;

    G1 dbl() const;
    G1 add(const G1& o) const;
    G1 neg() const { return {X, -Y, Z}; }
    G1 mul(const U256& k) const;
    G1 mul(const Fr& k) const { return mul(k.to_u256()); }

    /// Affine curve membership y^2 = x^3 + 3; identity passes.
    bool on_curve() const;
};

// ---------------------------------------------------------------------------
// G2: y^2 = x^3 + 3/(9+u) over Fp2 (D-type sextic twist). The curve order is
// h2 * r; points deserialized from bytes get an explicit subgroup check.

struct G2 {
    Fp2 X, Y, Z;

    static G2 identity() { return {Fp2::one(), Fp2::one(), Fp2::zero()}; }
    static G2 generator();
    static const Fp2& twist_b();

    bool is_identity() const { return Z.is_zero(); }

    static G2 from_affine(const Fp2& x, const Fp2& y) { return {x, y, Fp2::one()}; }
    std::pair<Fp2, Fp2> to_affine() const;

    bool operator==(const G2& o) const;

    G2 dbl() const;
    G2 add(const G2& o) const;
    G2 neg() const { return {X, -Y, Z}; }
    G2 mul(const U256& k) const;
    G2 mul(const Fr& k) const { return mul(k.to_u256()); }

    bool on_curve() const;
    bool in_subgroup() const;
};

// ---------------------------------------------------------------------------
// Canonical encodings.
//
// G1: 33 bytes. Flag 0x00 + zero padding for identity; 0x02/0x03 (y parity)
//     followed by 32-byte big-endian x otherwise.
// G2: 129 bytes. Flag 0x00 for identity; 0x04 followed by x.c1, x.c0, y.c1,
//     y.c0 as 32-byte big-endian words otherwise.

std::array<uint8_t, 33> g1_to_bytes(const G1& p);
std::optional<G1> g1_from_bytes(std::span<const uint8_t> in);

std::array<uint8_t, 129> g2_to_bytes(const G2& p);
std::optional<G2> g2_from_bytes(std::span<const uint8_t> in);

}  // namespace sn::bn
