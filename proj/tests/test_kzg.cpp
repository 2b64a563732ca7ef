#include <doctest.h>

#include "sendingnet/kzg.hpp"

using namespace sn;
using namespace sn::kzg;
using group::GroupElement;
using group::Scalar;

namespace {

GroupElement g() { return GroupElement::generator(); }

Polynomial random_poly(Rng& rng, size_t ncoeffs) {
    Polynomial p;
    for (size_t i = 0; i < ncoeffs; ++i) p.coeffs.push_back(Scalar::random(rng));
    return p;
}

std::vector<Scalar> random_vector(Rng& rng, size_t n) {
    std::vector<Scalar> v;
    for (size_t i = 0; i < n; ++i) v.push_back(Scalar::random(rng));
    return v;
}

Scalar eval_psi_at(size_t i, size_t n, const Scalar& tau) {
    // symbolic oracle: build psi_i as interpolation of the one-hot vector,
    // then evaluate at tau
    std::vector<Scalar> xs, ys;
    for (size_t j = 0; j < n; ++j) {
        xs.push_back(Scalar::from_u64(j));
        ys.push_back(j == i ? Scalar::one() : Scalar::zero());
    }
    return interpolate(xs, ys).eval(tau);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Rng rng(101);
    Polynomial a = random_poly(rng, 6);
    Polynomial b = random_poly(rng, 4);
    Scalar at = Scalar::random(rng);
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    CHECK((a - b).eval(at) == a.eval(at) - b.eval(at));
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));

    // exact division round trip
    Polynomial q = (a * b).divide_exact(b);
    CHECK(q.eval(at) == a.eval(at));
    Polynomial bad = a * b + Polynomial::constant(Scalar::one());
    CHECK_THROWS_AS((void)bad.divide_exact(b), std::invalid_argument);

    // synthetic division by (X - root) of a poly vanishing there
    Scalar root = Scalar::from_u64(9);
    Polynomial shifted = a - Polynomial::constant(a.eval(root));
    Polynomial lin = shifted.divide_by_linear(root);
    CHECK(lin.eval(at) * (at - root) == shifted.eval(at));
}

TEST_CASE("interpolation reproduces samples") {
    Rng rng(103);
    std::vector<Scalar> xs, ys;
    for (int i = 0; i < 7; ++i) {
        xs.push_back(Scalar::from_u64(i * i + 1));
        ys.push_back(Scalar::random(rng));
    }
    Polynomial p = interpolate(xs, ys);
    for (size_t i = 0; i < xs.size(); ++i) CHECK(p.eval(xs[i]) == ys[i]);
    CHECK(p.degree() <= xs.size() - 1);
}

TEST_CASE("setup shapes and degenerate trapdoors") {
    KzgParams p1 = setup(1, Scalar::from_u64(5));
    CHECK(p1.powers.size() == 2);
    CHECK(p1.powers[0] == g());
    REQUIRE(p1.lagrange_basis.size() == 1);
    CHECK(p1.lagrange_basis[0] == g());  // psi_0 = 1 for n = 1

    // n=2, tau=3: l_0 = -2 g, l_1 = 3 g
    KzgParams p2 = setup(2, Scalar::from_u64(3));
    CHECK(p2.lagrange_basis[0] == group::scalar_mul(-Scalar::from_u64(2), g()));
    CHECK(p2.lagrange_basis[1] == group::scalar_mul(Scalar::from_u64(3), g()));

    CHECK_THROWS_AS((void)setup(4, Scalar::from_u64(2)), std::invalid_argument);
    CHECK_THROWS_AS((void)setup(0, Scalar::from_u64(7)), std::invalid_argument);

    // lagrange basis matches the symbolic psi oracle
    Rng rng(105);
    Scalar tau = Scalar::random(rng);
    KzgParams p8 = setup(8, tau);
    for (size_t i = 0; i < 8; ++i) {
        CHECK(p8.lagrange_basis[i] == group::scalar_mul(eval_psi_at(i, 8, tau), g()));
    }

    // committing the all-ones vector equals g (sum of psi_i is 1)
    std::vector<Scalar> ones(8, Scalar::one());
    CHECK(commit_vector(p8, ones).point == p8.powers[0]);
}

TEST_CASE("commit_poly against trapdoor-evaluation oracle") {
    Rng rng(107);
    Scalar tau = Scalar::random(rng);
    KzgParams params = setup(8, tau);

    Scalar c = Scalar::from_u64(1234);
    CHECK(commit_poly(params, Polynomial::constant(c)).point == group::scalar_mul(c, g()));

    Polynomial ident;
    ident.coeffs = {Scalar::zero(), Scalar::one()};
    CHECK(commit_poly(params, ident).point == params.powers[1]);

    Polynomial phi = random_poly(rng, 8);
    CHECK(commit_poly(params, phi).point == group::scalar_mul(phi.eval(tau), g()));

    Polynomial toobig = random_poly(rng, 9);
    CHECK_THROWS_AS((void)commit_poly(params, toobig), std::invalid_argument);
}

TEST_CASE("commit_vector equals interpolating-polynomial commitment") {
    Rng rng(109);
    KzgParams params = setup_seeded(8, 4242);
    std::vector<Scalar> v = random_vector(rng, 8);

    std::vector<Scalar> domain;
    for (int i = 0; i < 8; ++i) domain.push_back(Scalar::from_u64(i));
    Polynomial phi = interpolate(domain, v);
    CHECK(commit_vector(params, v) == commit_poly(params, phi));

    std::vector<Scalar> zeros(8, Scalar::zero());
    CHECK(commit_vector(params, zeros).point.is_identity());

    std::vector<Scalar> onehot(8, Scalar::zero());
    onehot[3] = Scalar::one();
    CHECK(commit_vector(params, onehot).point == params.lagrange_basis[3]);

    std::vector<Scalar> wrong(7, Scalar::zero());
    CHECK_THROWS_AS((void)commit_vector(params, wrong), std::invalid_argument);
}

TEST_CASE("witness creation and verification") {
    Rng rng(111);
    Scalar tau = Scalar::random(rng);
    KzgParams params = setup(8, tau);

    // constant polynomial: identity witness
    Polynomial c = Polynomial::constant(Scalar::from_u64(77));
    EvalProof p = create_witness(params, c, Scalar::from_u64(5));
    CHECK(p.witness.is_identity());
    CHECK(p.value == Scalar::from_u64(77));
    CHECK(verify_eval(params, commit_poly(params, c), p.point, p.value, p.witness));

    // poly X at point 0: witness g, value 0
    Polynomial ident;
    ident.coeffs = {Scalar::zero(), Scalar::one()};
    EvalProof p2 = create_witness(params, ident, Scalar::zero());
    CHECK(p2.witness == g());
    CHECK(p2.value.is_zero());

    // random degree-7 at point 3, with an independent synthetic-division oracle
    Polynomial phi = random_poly(rng, 8);
    Scalar point = Scalar::from_u64(3);
    EvalProof p3 = create_witness(params, phi, point);
    CHECK(p3.value == phi.eval(point));
    // oracle: q(tau) computed in the scalar field directly
    Polynomial num = phi - Polynomial::constant(phi.eval(point));
    Scalar q_at_tau = num.eval(tau) * (tau - point).inverse();
    CHECK(p3.witness == group::scalar_mul(q_at_tau, g()));
    CHECK(verify_eval(params, commit_poly(params, phi), point, p3.value, p3.witness));

    // completeness + soundness probes
    Commitment cm = commit_poly(params, phi);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar at = Scalar::random(rng);
        EvalProof pr = create_witness(params, phi, at);
        CHECK(verify_eval(params, cm, at, pr.value, pr.witness));
        CHECK_FALSE(verify_eval(params, cm, at, pr.value + Scalar::one(), pr.witness));
    }

    // zero polynomial special case
    CHECK(verify_eval(params, Commitment{GroupElement::identity()}, Scalar::from_u64(9),
                      Scalar::zero(), GroupElement::identity()));
}

TEST_CASE("homomorphism and commitment updates") {
    Rng rng(113);
    KzgParams params = setup_seeded(8, 777);
    std::vector<Scalar> u = random_vector(rng, 8);
    std::vector<Scalar> w = random_vector(rng, 8);
    std::vector<Scalar> sum(8);
    for (int i = 0; i < 8; ++i) sum[i] = u[i] + w[i];
    CHECK(commit_vector(params, u).point + commit_vector(params, w).point ==
          commit_vector(params, sum).point);

    Commitment cu = commit_vector(params, u);
    CHECK(update_commitment(params, cu, 2, Scalar::zero()) == cu);

    // telescoping: from all-zero, n one-updates reach the all-ones commitment
    Commitment acc = commit_vector(params, std::vector<Scalar>(8, Scalar::zero()));
    for (size_t i = 0; i < 8; ++i) acc = update_commitment(params, acc, i, Scalar::one());
    CHECK(acc == commit_vector(params, std::vector<Scalar>(8, Scalar::one())));

    // random single updates equal full recommit
    for (int trial = 0; trial < 20; ++trial) {
        size_t idx = static_cast<size_t>(rng.below(8));
        Scalar delta = Scalar::random(rng);
        Commitment updated = update_commitment(params, cu, idx, delta);
        std::vector<Scalar> mutated = u;
        mutated[idx] = mutated[idx] + delta;
        CHECK(updated == commit_vector(params, mutated));
    }

    CHECK_THROWS_AS((void)update_commitment(params, cu, 8, Scalar::one()), std::out_of_range);
}

TEST_CASE("subvector proofs") {
    Rng rng(115);
    KzgParams params = setup_seeded(16, 909);
    std::vector<Scalar> v = random_vector(rng, 16);
    Commitment cm = commit_vector(params, v);

    // singleton set degenerates to the single-point witness
    std::vector<Scalar> domain;
    for (int i = 0; i < 16; ++i) domain.push_back(Scalar::from_u64(i));
    Polynomial phi = interpolate(domain, v);
    uint32_t only[] = {6};
    SubvectorProof single = prove_subvector(params, v, only);
    EvalProof direct = create_witness(params, phi, Scalar::from_u64(6));
    CHECK(single.witness == direct.witness);
    CHECK(single.values[0] == v[6]);
    CHECK(verify_subvector(params, cm, single.indices, single.values, single.witness));

    // full domain: zero quotient
    std::vector<uint32_t> all;
    for (uint32_t i = 0; i < 16; ++i) all.push_back(i);
    SubvectorProof full = prove_subvector(params, v, all);
    CHECK(full.witness.is_identity());
    CHECK(verify_subvector(params, cm, full.indices, full.values, full.witness));

    // random subset with tamper probes
    uint32_t subset[] = {1, 5, 9};
    SubvectorProof proof = prove_subvector(params, v, subset);
    CHECK(verify_subvector(params, cm, proof.indices, proof.values, proof.witness));

    auto perturbed = proof.values;
    perturbed[1] = perturbed[1] + Scalar::one();
    CHECK_FALSE(verify_subvector(params, cm, proof.indices, perturbed, proof.witness));

    auto swapped = proof.values;
    std::swap(swapped[0], swapped[2]);
    CHECK_FALSE(verify_subvector(params, cm, proof.indices, swapped, proof.witness));

    uint32_t dup[] = {3, 3};
    CHECK_THROWS_AS((void)prove_subvector(params, v, dup), std::invalid_argument);
    std::vector<uint32_t> none;
    CHECK_THROWS_AS((void)prove_subvector(params, v, none), std::invalid_argument);
    CHECK_FALSE(verify_subvector(params, cm, none, {}, proof.witness));
}

TEST_CASE("params serialization round trip") {
    KzgParams params = setup_seeded(4, 31337);
    Bytes enc = params.to_bytes();
    auto back = KzgParams::from_bytes(enc);
    REQUIRE(back.has_value());
    CHECK(back->n == params.n);
    REQUIRE(back->powers.size() == params.powers.size());
    for (size_t i = 0; i < params.powers.size(); ++i) CHECK(back->powers[i] == params.powers[i]);
    for (size_t i = 0; i < params.lagrange_basis.size(); ++i)
        CHECK(back->lagrange_basis[i] == params.lagrange_basis[i]);
    CHECK(back->to_bytes() == enc);

    enc[8] ^= 0xff;
    CHECK_FALSE(KzgParams::from_bytes(enc).has_value());
}
