#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sendingnet/group.hpp"

namespace sn::kzg {

using group::GroupElement;
using group::Scalar;

/// Dense coefficient form, low degree first. Trailing zeros are allowed and
/// ignored by degree().
struct Polynomial {
    std::vector<Scalar> coeffs;

    static Polynomial zero() { return {}; }
    static Polynomial constant(const Scalar& c) { return {{c}}; }

    size_t degree() const;
    bool is_zero() const { return degree() == 0 && (coeffs.empty() || coeffs[0].is_zero()); }

    Scalar eval(const Scalar& at) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    /// Quotient of division by (X - root); remainder is discarded, so this is
    /// exact only when root is a zero of the polynomial being divided.
    Polynomial divide_by_linear(const Scalar& root) const;

    /// Exact long division; throws std::invalid_argument when the remainder
    /// is nonzero.
    Polynomial divide_exact(const Polynomial& divisor) const;
};

/// Interpolating polynomial through (xs[i], ys[i]); xs must be distinct.
Polynomial interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys);

/// prod_i (X - xs[i]).
Polynomial vanishing(std::span<const Scalar> xs);

/// Public parameters: powers of the (discarded) trapdoor tau in the exponent
/// plus the Lagrange basis over the evaluation domain {0, .., n-1}. powers
/// holds n+1 entries so the verifier can commit the degree-n vanishing
/// polynomial of the full domain.
struct KzgParams {
    size_t n = 0;
    std::vector<GroupElement> powers;          // g^{tau^i}, i in [0, n]
    std::vector<GroupElement> lagrange_basis;  // g^{psi_i(tau)}, i in [0, n)

    const GroupElement& g() const { return powers[0]; }
    const GroupElement& g_tau() const { return powers[1]; }

    Bytes to_bytes() const;
    static std::optional<KzgParams> from_bytes(std::span<const uint8_t> in);
};

struct Commitment {
    GroupElement point;

    bool operator==(const Commitment& o) const { return point == o.point; }
    Bytes to_bytes() const { return point.to_bytes(); }
};

struct EvalProof {
    Scalar point;
    Scalar value;
    GroupElement witness;
};

struct SubvectorProof {
    std::vector<uint32_t> indices;  // sorted, distinct, < n
    std::vector<Scalar> values;
    GroupElement witness;
};

/// Builds params from an explicit trapdoor, which is not retained. Throws
/// std::invalid_argument when n == 0 or the trapdoor lies in {0, .., n-1}
/// (the Lagrange basis degenerates there).
KzgParams setup(size_t n, const Scalar& trapdoor);

/// Deterministic fixture mode: trapdoor derived from the seed.
KzgParams setup_seeded(size_t n, uint64_t seed);

Commitment commit_poly(const KzgParams& params, const Polynomial& poly);
Commitment commit_vector(const KzgParams& params, std::span<const Scalar> v);

EvalProof create_witness(const KzgParams& params, const Polynomial& poly, const Scalar& point);

bool verify_eval(const KzgParams& params, const Commitment& c, const Scalar& point,
                 const Scalar& value, const GroupElement& witness);

Commitment update_commitment(const KzgParams& params, const Commitment& c, size_t index,
                             const Scalar& delta);

SubvectorProof prove_subvector(const KzgParams& params, std::span<const Scalar> v,
                               std::span<const uint32_t> indices);

bool verify_subvector(const KzgParams& params, const Commitment& c,
                      std::span<const uint32_t> indices, std::span<const Scalar> values,
                      const GroupElement& witness);

}  // namespace sn::kzg
