#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sendingnet/bytes.hpp"
#include "sendingnet/pairing/pairing.hpp"
#include "sendingnet/rng.hpp"

namespace sn::group {

/// Element of Z_r, the prime order of the pairing groups.
class Scalar {
public:
    Scalar() : v_(bn::Fr::zero()) {}
    explicit Scalar(bn::Fr v) : v_(v) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(bn::Fr::one()); }
    static Scalar from_u64(uint64_t x) { return Scalar(bn::Fr::from_u64(x)); }

    /// Unbiased uniform draw by rejection below 2^254.
    static Scalar random(Rng& rng);

    /// Reduces an arbitrary 32-byte digest into the field.
    static Scalar from_digest(std::span<const uint8_t> digest32);

    bool is_zero() const { return v_.is_zero(); }
    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    Scalar operator+(const Scalar& o) const { return Scalar(v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { return Scalar(v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { return Scalar(v_ * o.v_); }
    Scalar operator-() const { return Scalar(-v_); }
    Scalar inverse() const { return Scalar(v_.inverse()); }

    std::array<uint8_t, 32> to_bytes() const { return v_.to_bytes(); }
    static std::optional<Scalar> from_bytes(std::span<const uint8_t> in);

    const bn::Fr& fr() const { return v_; }

private:
    bn::Fr v_;
};

/// Symmetric-pairing facade over the asymmetric curve: an element carries the
/// same discrete log with respect to both fixed generator bases, so
/// pairing(X, Y) behaves like a type-1 map. Elements built through this type
/// keep the two halves consistent by construction; deserialization re-checks
/// the pairing relation.
class GroupElement {
public:
    GroupElement() : p1_(bn::G1::identity()), p2_(bn::G2::identity()) {}
    GroupElement(bn::G1 p1, bn::G2 p2) : p1_(p1), p2_(p2) {}

    static GroupElement identity() { return GroupElement(); }
    static GroupElement generator() { return {bn::G1::generator(), bn::G2::generator()}; }

    bool is_identity() const { return p1_.is_identity(); }
    bool operator==(const GroupElement& o) const { return p1_ == o.p1_ && p2_ == o.p2_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    GroupElement operator+(const GroupElement& o) const { return {p1_.add(o.p1_), p2_.add(o.p2_)}; }
    GroupElement operator-(const GroupElement& o) const { return {p1_.add(o.p1_.neg()), p2_.add(o.p2_.neg())}; }
    GroupElement operator-() const { return {p1_.neg(), p2_.neg()}; }

    const bn::G1& g1() const { return p1_; }
    const bn::G2& g2() const { return p2_; }

    Bytes to_bytes() const;
    /// Full validation: on-curve, subgroup, and matching discrete logs.
    static std::optional<GroupElement> from_bytes(std::span<const uint8_t> in);

private:
    bn::G1 p1_;
    bn::G2 p2_;
};

class TargetElement {
public:
    TargetElement() : v_(bn::Gt::one()) {}
    explicit TargetElement(bn::Gt v) : v_(v) {}

    static TargetElement one() { return TargetElement(); }

    bool operator==(const TargetElement& o) const { return v_ == o.v_; }
    bool operator!=(const TargetElement& o) const { return v_ != o.v_; }

    TargetElement operator*(const TargetElement& o) const { return TargetElement(v_ * o.v_); }
    TargetElement pow(const Scalar& e) const { return TargetElement(v_.pow(e.fr())); }
    TargetElement inverse() const { return TargetElement(v_.inverse()); }

    const bn::Gt& gt() const { return v_; }

private:
    bn::Gt v_;
};

GroupElement scalar_mul(const Scalar& s, const GroupElement& p);

TargetElement pairing(const GroupElement& x, const GroupElement& y);

/// Sum of s_i * P_i; throws std::invalid_argument on length mismatch.
GroupElement multi_scalar_mul(std::span<const Scalar> scalars, std::span<const GroupElement> points);

/// e(a1, b2) == e(c1, d2) as one product with a shared final exponentiation.
bool pairing_equal(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                   const GroupElement& d);

}  // namespace sn::group
