#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include "sendingnet/group.hpp"
#include "sendingnet/rng.hpp"

using namespace sn;
using namespace sn::bn;
namespace mp = boost::multiprecision;

namespace {

mp::cpp_int to_cpp(const U256& a) {
    mp::cpp_int v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 64) | a.w[i];
    return v;
}

U256 from_cpp(mp::cpp_int v) {
    U256 out{};
    for (int i = 0; i < 4; ++i) {
        out.w[i] = static_cast<uint64_t>(v & 0xffffffffffffffffULL);
        v >>= 64;
    }
    return out;
}

U256 random_u256(Rng& rng) {
    U256 out{};
    for (auto& w : out.w) w = rng.next();
    return out;
}

Fr random_fr(Rng& rng) { return Fr::from_u256(random_u256(rng)); }
Fp random_fp(Rng& rng) { return Fp::from_u256(random_u256(rng)); }

Fp12 random_fp12(Rng& rng) {
    auto f2 = [&] { return Fp2{random_fp(rng), random_fp(rng)}; };
    auto f6 = [&] { return Fp6{f2(), f2(), f2()}; };
    return Fp12{f6(), f6()};
}

}  // namespace

TEST_CASE("montgomery field matches bignum oracle") {
    Rng rng(0xf1e1d);
    mp::cpp_int p = to_cpp(kBaseModulus);
    mp::cpp_int r = to_cpp(kScalarModulus);

    for (int trial = 0; trial < 2000; ++trial) {
        U256 a = random_u256(rng), b = random_u256(rng);
        mp::cpp_int ai = to_cpp(a) % p, bi = to_cpp(b) % p;
        Fp fa = Fp::from_u256(a), fb = Fp::from_u256(b);
        CHECK(to_cpp((fa * fb).to_u256()) == (ai * bi) % p);
        CHECK(to_cpp((fa + fb).to_u256()) == (ai + bi) % p);
        CHECK(to_cpp((fa - fb).to_u256()) == ((ai - bi) % p + p) % p);

        mp::cpp_int ar = to_cpp(a) % r, br = to_cpp(b) % r;
        Fr ga = Fr::from_u256(a), gb = Fr::from_u256(b);
        CHECK(to_cpp((ga * gb).to_u256()) == (ar * br) % r);
    }

    // inverse and pow against powm
    for (int trial = 0; trial < 20; ++trial) {
        Fp a = random_fp(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Fp::one());
        U256 e = random_u256(rng);
        mp::cpp_int want = mp::powm(to_cpp(a.to_u256()), to_cpp(e), p);
        CHECK(to_cpp(a.pow(e).to_u256()) == want);
    }
}

TEST_CASE("field byte serialization round-trips and rejects overflow") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Fr a = random_fr(rng);
        auto bytes = a.to_bytes();
        auto back = Fr::from_bytes(bytes);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    auto mod_bytes = [] {
        std::array<uint8_t, 32> out{};
        U256 m = kScalarModulus;
        for (int i = 0; i < 4; ++i)
            for (int b = 0; b < 8; ++b) out[i * 8 + b] = uint8_t(m.w[3 - i] >> (56 - 8 * b));
        return out;
    }();
    CHECK_FALSE(Fr::from_bytes(mod_bytes).has_value());
}

TEST_CASE("fp sqrt finds roots of squares") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        Fp a = random_fp(rng);
        Fp sq = a.square();
        auto root = sq.sqrt();
        REQUIRE(root.has_value());
        CHECK((*root == a || *root == -a));
    }
}

TEST_CASE("tower fields satisfy inverse and ring identities") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Fp2 a{random_fp(rng), random_fp(rng)};
        Fp2 b{random_fp(rng), random_fp(rng)};
        Fp2 c{random_fp(rng), random_fp(rng)};
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Fp2::one());
        CHECK(a.square() == a * a);

        Fp12 x = random_fp12(rng);
        Fp12 y = random_fp12(rng);
        CHECK(x.square() == x * x);
        CHECK(x * y == y * x);
        CHECK(x * x.inverse() == Fp12::one());
    }
}

TEST_CASE("fp12 frobenius equals pow(p)") {
    Rng rng(13);
    for (int i = 0; i < 5; ++i) {
        Fp12 x = random_fp12(rng);
        CHECK(x.frobenius() == x.pow(kBaseModulus));
    }
}

TEST_CASE("curve groups: generators, order, jacobian laws") {
    CHECK(G1::generator().on_curve());
    CHECK(G2::generator().on_curve());
    CHECK(G1::generator().mul(kScalarModulus).is_identity());
    CHECK(G2::generator().mul(kScalarModulus).is_identity());
    CHECK(G2::generator().in_subgroup());

    Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        Fr a = random_fr(rng), b = random_fr(rng);
        G1 P = G1::generator().mul(a);
        G1 Q = G1::generator().mul(b);
        CHECK(P.add(Q) == Q.add(P));
        CHECK(P.add(Q).add(P) == P.dbl().add(Q));
        CHECK(P.add(P.neg()).is_identity());
        CHECK(G1::generator().mul(a + b) == P.add(Q));
        CHECK(P.on_curve());

        G2 R = G2::generator().mul(a);
        CHECK(G2::generator().mul(a + b) == R.add(G2::generator().mul(b)));
        CHECK(R.on_curve());
    }
}

TEST_CASE("point serialization round-trips") {
    Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        Fr k = random_fr(rng);
        G1 p = G1::generator().mul(k);
        auto enc = g1_to_bytes(p);
        auto back = g1_from_bytes(enc);
        REQUIRE(back.has_value());
        CHECK(*back == p);

        G2 q = G2::generator().mul(k);
        auto enc2 = g2_to_bytes(q);
        auto back2 = g2_from_bytes(enc2);
        REQUIRE(back2.has_value());
        CHECK(*back2 == q);
    }
    CHECK(g1_from_bytes(g1_to_bytes(G1::identity())).value().is_identity());
    CHECK(g2_from_bytes(g2_to_bytes(G2::identity())).value().is_identity());
}

TEST_CASE("pairing bilinearity and non-degeneracy") {
    Rng rng(23);
    Gt base = pairing(G1::generator(), G2::generator());
    CHECK(base != Gt::one());

    for (int i = 0; i < 8; ++i) {
        Fr a = random_fr(rng), b = random_fr(rng);
        Gt lhs = pairing(G1::generator().mul(a), G2::generator().mul(b));
        Gt rhs = base.pow((a * b).to_u256());
        CHECK(lhs == rhs);
    }
    CHECK(pairing(G1::identity(), G2::generator()) == Gt::one());
    CHECK(pairing(G1::generator(), G2::identity()) == Gt::one());
}

TEST_CASE("structured final exponentiation matches naive oracle") {
    Rng rng(29);
    for (int i = 0; i < 3; ++i) {
        Fr a = random_fr(rng), b = random_fr(rng);
        Fp12 f = miller_loop(G1::generator().mul(a), G2::generator().mul(b));
        CHECK(final_exponentiation(f) == final_exponentiation_naive(f));
    }
}

// ---------------------------------------------------------------------------
// Symmetric facade

TEST_CASE("group element scalar_mul basics") {
    using namespace sn::group;
    GroupElement g = GroupElement::generator();
    CHECK(scalar_mul(Scalar::zero(), g).is_identity());
    CHECK(scalar_mul(Scalar::one(), g) == g);

    // independent binary double-and-add oracle
    auto naive_mul = [](const Scalar& s, const GroupElement& p) {
        auto e = s.fr().to_u256();
        GroupElement acc = GroupElement::identity();
        for (int i = u256_bit_length(e) - 1; i >= 0; --i) {
            acc = acc + acc;
            if (u256_bit(e, i)) acc = acc + p;
        }
        return acc;
    };

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Scalar a = Scalar::random(rng), b = Scalar::random(rng);
        CHECK(scalar_mul(a + b, g) == scalar_mul(a, g) + scalar_mul(b, g));
        if (i < 5) CHECK(scalar_mul(a, g) == naive_mul(a, g));
    }
}

TEST_CASE("facade pairing is symmetric and bilinear") {
    using namespace sn::group;
    GroupElement g = GroupElement::generator();
    TargetElement e_gg = pairing(g, g);
    CHECK(e_gg != TargetElement::one());

    GroupElement p2 = scalar_mul(Scalar::from_u64(2), g);
    GroupElement p3 = scalar_mul(Scalar::from_u64(3), g);
    CHECK(pairing(p2, p3) == e_gg.pow(Scalar::from_u64(6)));
    CHECK(pairing(GroupElement::identity(), p3) == TargetElement::one());

    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        Scalar a = Scalar::random(rng), b = Scalar::random(rng);
        CHECK(pairing(scalar_mul(a, g), scalar_mul(b, g)) == e_gg.pow(a * b));
    }
}

TEST_CASE("facade subgroup safety and serialization") {
    using namespace sn::group;
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        Scalar a = Scalar::random(rng);
        GroupElement p = scalar_mul(a, GroupElement::generator());
        // r * E == identity
        Scalar r_minus_1 = Scalar::zero() - Scalar::one();
        CHECK((scalar_mul(r_minus_1, p) + p).is_identity());

        Bytes enc = p.to_bytes();
        auto back = GroupElement::from_bytes(enc);
        REQUIRE(back.has_value());
        CHECK(*back == p);
        CHECK(back->to_bytes() == enc);
    }

    // mismatched halves must be rejected
    GroupElement a = scalar_mul(Scalar::from_u64(5), sn::group::GroupElement::generator());
    GroupElement b = scalar_mul(Scalar::from_u64(7), sn::group::GroupElement::generator());
    Bytes forged = a.to_bytes();
    Bytes btail = b.to_bytes();
    std::copy(btail.begin() + 33, btail.end(), forged.begin() + 33);
    CHECK_FALSE(GroupElement::from_bytes(forged).has_value());
}

TEST_CASE("multi_scalar_mul matches fold oracle") {
    using namespace sn::group;
    CHECK(multi_scalar_mul({}, {}).is_identity());

    GroupElement g = GroupElement::generator();
    std::vector<Scalar> ones = {Scalar::one()};
    std::vector<GroupElement> pts = {g};
    CHECK(multi_scalar_mul(ones, pts) == g);

    Rng rng(43);
    std::vector<Scalar> ss;
    std::vector<GroupElement> ps;
    GroupElement want = GroupElement::identity();
    for (int i = 0; i < 8; ++i) {
        ss.push_back(Scalar::random(rng));
        ps.push_back(scalar_mul(Scalar::random(rng), g));
        want = want + scalar_mul(ss.back(), ps.back());
    }
    CHECK(multi_scalar_mul(ss, ps) == want);

    std::vector<Scalar> bad = {Scalar::one(), Scalar::one()};
    CHECK_THROWS_AS((void)multi_scalar_mul(bad, pts), std::invalid_argument);
}
