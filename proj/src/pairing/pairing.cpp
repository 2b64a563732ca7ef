#include "sendingnet/pairing/pairing.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sn::bn {

const std::array<Fp2, 6>& frobenius_gamma() {
    static const std::array<Fp2, 6> table = [] {
        U256 e{};
        u256_sub(e, kBaseModulus, U256{{1, 0, 0, 0}});
        e = u256_div_u64(e, 6);  // (p - 1) / 6, exact: p = 1 mod 6
        Fp2 g = fp2_xi().pow(e);
        std::array<Fp2, 6> t;
        t[0] = Fp2::one();
        for (int k = 1; k < 6; ++k) t[k] = t[k - 1] * g;
        return t;
    }();
    return table;
}

namespace {

// Ate loop count |6x + 2| = 29793968203157093288, a 65-bit value.
const U256 kAteLoop{{0x9d797039be763ba8ULL, 0x0000000000000001ULL, 0, 0}};

// Affine point with coordinates untwisted into Fp12.
struct PtExt {
    Fp12 x, y;
};

Fp12 embed_fp(const Fp& a) {
    Fp12 out = Fp12::zero();
    out.c0.c0.c0 = a;
    return out;
}

// x*w^2 = x*v sits at c0.c1; y*w^3 = y*v*w sits at c1.c1.
PtExt untwist(const Fp2& x, const Fp2& y) {
    Fp12 X = Fp12::zero();
    X.c0.c1 = x;
    Fp12 Y = Fp12::zero();
    Y.c1.c1 = y;
    return {X, Y};
}

Fp12 sub12(const Fp12& a, const Fp12& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
}

Fp12 frob_pt(const Fp12& a) { return a.frobenius(); }

/// Line through T with slope lambda, evaluated at embedded P:
/// l = (py - Ty) - lambda * (px - Tx).
Fp12 line_eval(const PtExt& T, const Fp12& lambda, const Fp12& px, const Fp12& py) {
    return sub12(sub12(py, T.y), lambda * sub12(px, T.x));
}

/// f *= tangent line at T; T = 2T.
void double_step(Fp12& f, PtExt& T, const Fp12& px, const Fp12& py) {
    Fp12 x2 = T.x.square();
    Fp12 num = {x2.c0 + x2.c0 + x2.c0, x2.c1 + x2.c1 + x2.c1};  // 3x^2
    Fp12 den = {T.y.c0 + T.y.c0, T.y.c1 + T.y.c1};              // 2y
    Fp12 lambda = num * den.inverse();
    f = f * line_eval(T, lambda, px, py);
    Fp12 x3 = sub12(lambda.square(), {T.x.c0 + T.x.c0, T.x.c1 + T.x.c1});
    Fp12 y3 = sub12(lambda * sub12(T.x, x3), T.y);
    T = {x3, y3};
}

/// f *= chord line through T and Q; T = T + Q.
void add_step(Fp12& f, PtExt& T, const PtExt& Q, const Fp12& px, const Fp12& py) {
    Fp12 lambda = sub12(Q.y, T.y) * sub12(Q.x, T.x).inverse();
    f = f * line_eval(T, lambda, px, py);
    Fp12 x3 = sub12(sub12(lambda.square(), T.x), Q.x);
    Fp12 y3 = sub12(lambda * sub12(T.x, x3), T.y);
    T = {x3, y3};
}

}  // namespace

Fp12 miller_loop(const G1& P, const G2& Q) {
    if (P.is_identity() || Q.is_identity()) return Fp12::one();

    auto [pax, pay] = P.to_affine();
    Fp12 px = embed_fp(pax);
    Fp12 py = embed_fp(pay);

    auto [qx, qy] = Q.to_affine();
    PtExt Qe = untwist(qx, qy);
    PtExt T = Qe;
    Fp12 f = Fp12::one();

    for (int i = u256_bit_length(kAteLoop) - 2; i >= 0; --i) {
        f = f.square();
        double_step(f, T, px, py);
        if (u256_bit(kAteLoop, i)) add_step(f, T, Qe, px, py);
    }

    // Frobenius correction steps: T + pi(Q), then line with -pi^2(Q).
    PtExt Q1 = {frob_pt(Qe.x), frob_pt(Qe.y)};
    PtExt Q2 = {frob_pt(Q1.x), frob_pt(Q1.y)};
    Q2.y = {-Q2.y.c0, -Q2.y.c1};
    add_step(f, T, Q1, px, py);
    add_step(f, T, Q2, px, py);
    return f;
}

namespace {

Fp12 pow_by_param_x(const Fp12& f) {
    const U256 x{{kBnParamX, 0, 0, 0}};
    return f.pow(x);
}

Fp12 hard_part(const Fp12& f) {
    Fp12 fx = pow_by_param_x(f);
    Fp12 fx2 = pow_by_param_x(fx);
    Fp12 fx3 = pow_by_param_x(fx2);
    Fp12 fp = f.frobenius();
    Fp12 fp2 = fp.frobenius();
    Fp12 fp3 = fp2.frobenius();
    Fp12 fxp = fx.frobenius();
    Fp12 fx2p = fx2.frobenius();
    Fp12 fx3p = fx3.frobenius();
    Fp12 fx2p2 = fx2p.frobenius();

    Fp12 y0 = fp * fp2 * fp3;
    Fp12 y1 = f.conjugate();
    Fp12 y2 = fx2p2;
    Fp12 y3 = fxp.conjugate();
    Fp12 y4 = (fx * fx2p).conjugate();
    Fp12 y5 = fx2.conjugate();
    Fp12 y6 = (fx3 * fx3p).conjugate();

    Fp12 t0 = y6.square() * y4 * y5;
    Fp12 t1 = y3 * y5 * t0;
    t0 = t0 * y2;
    t1 = (t1.square() * t0).square();
    t0 = t1 * y1;
    t1 = t1 * y0;
    t0 = t0.square();
    return t0 * t1;
}

}  // namespace

Fp12 final_exponentiation(const Fp12& f) {
    // Easy part: f^((p^6 - 1)(p^2 + 1)).
    Fp12 t = f.conjugate() * f.inverse();
    t = t.frobenius().frobenius() * t;
    return hard_part(t);
}

Fp12 final_exponentiation_naive(const Fp12& f) {
    namespace mp = boost::multiprecision;
    static const mp::cpp_int exponent = []() -> mp::cpp_int {
        mp::cpp_int p = 0;
        for (int i = 3; i >= 0; --i) p = (p << 64) | kBaseModulus.w[i];
        mp::cpp_int r = 0;
        for (int i = 3; i >= 0; --i) r = (r << 64) | kScalarModulus.w[i];
        mp::cpp_int pk = 1;
        for (int i = 0; i < 12; ++i) pk *= p;
        return (pk - 1) / r;
    }();
    Fp12 acc = Fp12::one();
    for (long i = static_cast<long>(mp::msb(exponent)); i >= 0; --i) {
        acc = acc.square();
        if (mp::bit_test(exponent, static_cast<unsigned>(i))) acc = acc * f;
    }
    return acc;
}

Gt pairing(const G1& P, const G2& Q) { return {final_exponentiation(miller_loop(P, Q))}; }

Gt pairing_product(std::span<const std::pair<G1, G2>> pairs) {
    Fp12 acc = Fp12::one();
    for (const auto& [p, q] : pairs) acc = acc * miller_loop(p, q);
    return {final_exponentiation(acc)};
}

}  // namespace sn::bn
