#include "sendingnet/group.hpp"

namespace sn::group {

Scalar Scalar::random(Rng& rng) {
    for (;;) {
        std::array<uint8_t, 32> buf{};
        rng.fill(buf);
        buf[0] &= 0x3f;  // clamp to 254 bits
        bn::U256 n{};
        for (int i = 0; i < 4; ++i) {
            uint64_t limb = 0;
            for (int b = 0; b < 8; ++b) limb = (limb << 8) | buf[i * 8 + b];
            n.w[3 - i] = limb;
        }
        if (auto v = bn::Fr::from_u256_checked(n)) return Scalar(*v);
    }
}

Scalar Scalar::from_digest(std::span<const uint8_t> digest32) {
    bn::U256 n{};
    for (int i = 0; i < 4 && i * 8 < static_cast<int>(digest32.size()); ++i) {
        uint64_t limb = 0;
        for (int b = 0; b < 8; ++b) limb = (limb << 8) | digest32[i * 8 + b];
        n.w[3 - i] = limb;
    }
    return Scalar(bn::Fr::from_u256(n));
}

std::optional<Scalar> Scalar::from_bytes(std::span<const uint8_t> in) {
    auto v = bn::Fr::from_bytes(in);
    if (!v) return std::nullopt;
    return Scalar(*v);
}

Bytes GroupElement::to_bytes() const {
    Bytes out;
    out.reserve(33 + 129);
    auto a = bn::g1_to_bytes(p1_);
    auto b = bn::g2_to_bytes(p2_);
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::optional<GroupElement> GroupElement::from_bytes(std::span<const uint8_t> in) {
    if (in.size() != 162) return std::nullopt;
    auto p1 = bn::g1_from_bytes(in.subspan(0, 33));
    auto p2 = bn::g2_from_bytes(in.subspan(33, 129));
    if (!p1 || !p2) return std::nullopt;
    if (p1->is_identity() != p2->is_identity()) return std::nullopt;
    if (!p1->is_identity()) {
        // Same discrete log on both bases: e(P1, h) == e(g, P2).
        std::pair<bn::G1, bn::G2> pairs[2] = {
            {*p1, bn::G2::generator()},
            {bn::G1::generator().neg(), *p2},
        };
        if (!(bn::pairing_product(pairs) == bn::Gt::one())) return std::nullopt;
    }
    return GroupElement(*p1, *p2);
}

GroupElement scalar_mul(const Scalar& s, const GroupElement& p) {
    bn::U256 k = s.fr().to_u256();
    return {p.g1().mul(k), p.g2().mul(k)};
}

TargetElement pairing(const GroupElement& x, const GroupElement& y) {
    return TargetElement(bn::pairing(x.g1(), y.g2()));
}

GroupElement multi_scalar_mul(std::span<const Scalar> scalars, std::span<const GroupElement> points) {
    if (scalars.size() != points.size())
        throw std::invalid_argument("multi_scalar_mul: length mismatch");
    GroupElement acc = GroupElement::identity();
    for (size_t i = 0; i < scalars.size(); ++i) {
        if (scalars[i].is_zero()) continue;
        acc = acc + scalar_mul(scalars[i], points[i]);
    }
    return acc;
}

bool pairing_equal(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                   const GroupElement& d) {
    std::pair<bn::G1, bn::G2> pairs[2] = {
        {a.g1(), b.g2()},
        {c.g1().neg(), d.g2()},
    };
    return bn::pairing_product(pairs) == bn::Gt::one();
}

}  // namespace sn::group
