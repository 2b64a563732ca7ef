#include "sendingnet/pairing/curves.hpp"

namespace sn::bn {

namespace {

// Shared Jacobian arithmetic for a = 0 short Weierstrass curves. EFD
// dbl-2009-l and add-2007-bl.
template <typename F, typename Point>
Point jac_dbl(const Point& P) {
    if (P.Z.is_zero()) return P;
    F A = P.X.square();
    F B = P.Y.square();
    F C = B.square();
    F t = (P.X + B).square() - A - C;
    F D = t + t;
    F E = A + A + A;
    F F2 = E.square();
    F X3 = F2 - (D + D);
    F C8 = C + C;
    C8 = C8 + C8;
    C8 = C8 + C8;
    F Y3 = E * (D - X3) - C8;
    F Z3 = (P.Y * P.Z);
    Z3 = Z3 + Z3;
    return {X3, Y3, Z3};
}

template <typename F, typename Point>
Point jac_add(const Point& P, const Point& Q) {
    if (P.Z.is_zero()) return Q;
    if (Q.Z.is_zero()) return P;
    F Z1Z1 = P.Z.square();
    F Z2Z2 = Q.Z.square();
    F U1 = P.X * Z2Z2;
    F U2 = Q.X * Z1Z1;
    F S1 = P.Y * Q.Z * Z2Z2;
    F S2 = Q.Y * P.Z * Z1Z1;
    if (U1 == U2) {
        if (S1 == S2) return jac_dbl<F, Point>(P);
        return Point::identity();
    }
    F H = U2 - U1;
    F I = (H + H).square();
    F J = H * I;
    F rr = S2 - S1;
    rr = rr + rr;
    F V = U1 * I;
    F X3 = rr.square() - J - (V + V);
    F S1J = S1 * J;
    F Y3 = rr * (V - X3) - (S1J + S1J);
    F Z3 = ((P.Z + Q.Z).square() - Z1Z1 - Z2Z2) * H;
    return {X3, Y3, Z3};
}

template <typename F, typename Point>
Point jac_mul(const Point& P, const U256& k) {
    // 4-bit fixed window
    Point table[16];
    table[0] = Point::identity();
    table[1] = P;
    for (int i = 2; i < 16; ++i) table[i] = jac_add<F, Point>(table[i - 1], P);
    Point acc = Point::identity();
    int bits = u256_bit_length(k);
    int windows = (bits + 3) / 4;
    for (int wi = windows - 1; wi >= 0; --wi) {
        for (int s = 0; s < 4; ++s) acc = jac_dbl<F, Point>(acc);
        unsigned nib = 0;
        for (int b = 3; b >= 0; --b) {
            int bit = wi * 4 + b;
            nib = (nib << 1) | (bit < bits && u256_bit(k, bit) ? 1u : 0u);
        }
        if (nib != 0) acc = jac_add<F, Point>(acc, table[nib]);
    }
    return acc;
}

template <typename F, typename Point>
bool jac_eq(const Point& P, const Point& Q) {
    bool pi = P.Z.is_zero(), qi = Q.Z.is_zero();
    if (pi || qi) return pi == qi;
    F Z1Z1 = P.Z.square();
    F Z2Z2 = Q.Z.square();
    if (!(P.X * Z2Z2 == Q.X * Z1Z1)) return false;
    return P.Y * (Z2Z2 * Q.Z) == Q.Y * (Z1Z1 * P.Z);
}

void fp_to_be(const Fp& v, uint8_t* out) {
    auto b = v.to_bytes();
    std::copy(b.begin(), b.end(), out);
}

}  // namespace

// --------------------------------------------------------------------- G1

std::pair<Fp, Fp> G1::to_affine() const {
    Fp zinv = Z.inverse();
    Fp zinv2 = zinv.square();
    return {X * zinv2, Y * zinv2 * zinv};
}

bool G1::operator==(const G1& o) const { return jac_eq<Fp, G1>(*this, o); }
G1 G1::dbl() const { return jac_dbl<Fp, G1>(*this); }
G1 G1::add(const G1& o) const { return jac_add<Fp, G1>(*this, o); }
G1 G1::mul(const U256& k) const { return jac_mul<Fp, G1>(*this, k); }

bool G1::on_curve() const {
    if (is_identity()) return true;
    auto [x, y] = to_affine();
    return y.square() == x.square() * x + Fp::from_u64(3);
}

// --------------------------------------------------------------------- G2

const Fp2& G2::twist_b() {
    static const Fp2 b = Fp2{Fp::from_u64(3), Fp::zero()} * fp2_xi().inverse();
    return b;
}

G2 G2::generator() {
    static const G2 gen = {
        {Fp::from_u256(kG2GenXc0), Fp::from_u256(kG2GenXc1)},
        {Fp::from_u256(kG2GenYc0), Fp::from_u256(kG2GenYc1)},
        Fp2::one(),
    };
    return gen;
}

std::pair<Fp2, Fp2> G2::to_affine() const {
    Fp2 zinv = Z.inverse();
    Fp2 zinv2 = zinv.square();
    return {X * zinv2, Y * zinv2 * zinv};
}

bool G2::operator==(const G2& o) const { return jac_eq<Fp2, G2>(*this, o); }
G2 G2::dbl() const { return jac_dbl<Fp2, G2>(*this); }
G2 G2::add(const G2& o) const { return jac_add<Fp2, G2>(*this, o); }
G2 G2::mul(const U256& k) const { return jac_mul<Fp2, G2>(*this, k); }

bool G2::on_curve() const {
    if (is_identity()) return true;
    auto [x, y] = to_affine();
    return y.square() == x.square() * x + twist_b();
}

bool G2::in_subgroup() const {
    if (is_identity()) return true;
    return on_curve() && mul(kScalarModulus).is_identity();
}

// ----------------------------------------------------------- serialization

std::array<uint8_t, 33> g1_to_bytes(const G1& p) {
    std::array<uint8_t, 33> out{};
    if (p.is_identity()) return out;
    auto [x, y] = p.to_affine();
    out[0] = y.is_odd() ? 0x03 : 0x02;
    fp_to_be(x, out.data() + 1);
    return out;
}

std::optional<G1> g1_from_bytes(std::span<const uint8_t> in) {
    if (in.size() != 33) return std::nullopt;
    if (in[0] == 0x00) {
        for (size_t i = 1; i < 33; ++i) {
            if (in[i] != 0) return std::nullopt;
        }
        return G1::identity();
    }
    if (in[0] != 0x02 && in[0] != 0x03) return std::nullopt;
    auto x = Fp::from_bytes(in.subspan(1, 32));
    if (!x) return std::nullopt;
    auto y = (x->square() * *x + Fp::from_u64(3)).sqrt();
    if (!y) return std::nullopt;
    Fp yv = *y;
    if (yv.is_odd() != (in[0] == 0x03)) yv = -yv;
    return G1::from_affine(*x, yv);
}

std::array<uint8_t, 129> g2_to_bytes(const G2& p) {
    std::array<uint8_t, 129> out{};
    if (p.is_identity()) return out;
    auto [x, y] = p.to_affine();
    out[0] = 0x04;
    fp_to_be(x.c1, out.data() + 1);
    fp_to_be(x.c0, out.data() + 33);
    fp_to_be(y.c1, out.data() + 65);
    fp_to_be(y.c0, out.data() + 97);
    return out;
}

std::optional<G2> g2_from_bytes(std::span<const uint8_t> in) {
    if (in.size() != 129) return std::nullopt;
    if (in[0] == 0x00) {
        for (size_t i = 1; i < 129; ++i) {
            if (in[i] != 0) return std::nullopt;
        }
        return G2::identity();
    }
    if (in[0] != 0x04) return std::nullopt;
    auto xc1 = Fp::from_bytes(in.subspan(1, 32));
    auto xc0 = Fp::from_bytes(in.subspan(33, 32));
    auto yc1 = Fp::from_bytes(in.subspan(65, 32));
    auto yc0 = Fp::from_bytes(in.subspan(97, 32));
    if (!xc0 || !xc1 || !yc0 || !yc1) return std::nullopt;
    G2 p = G2::from_affine({*xc0, *xc1}, {*yc0, *yc1});
    if (!p.in_subgroup()) return std::nullopt;
    return p;
}

}  // namespace sn::bn
