#include "sendingnet/kzg.hpp"

#include <algorithm>
#include <stdexcept>

#include "sendingnet/bytes.hpp"
#include "sendingnet/hash.hpp"

namespace sn::kzg {

size_t Polynomial::degree() const {
    for (size_t i = coeffs.size(); i > 0; --i) {
        if (!coeffs[i - 1].is_zero()) return i - 1;
    }
    return 0;
}

Scalar Polynomial::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero();
    for (size_t i = coeffs.size(); i > 0; --i) acc = acc * at + coeffs[i - 1];
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out;
    out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Scalar::zero());
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] + o.coeffs[i];
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out;
    out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Scalar::zero());
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] - o.coeffs[i];
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return zero();
    Polynomial out;
    out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Scalar::zero());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j) {
            out.coeffs[i + j] = out.coeffs[i + j] + coeffs[i] * o.coeffs[j];
        }
    }
    return out;
}

Polynomial Polynomial::divide_by_linear(const Scalar& root) const {
    size_t d = degree();
    if (coeffs.empty() || d == 0) return zero();
    Polynomial q;
    q.coeffs.assign(d, Scalar::zero());
    Scalar carry = coeffs[d];
    for (size_t i = d; i > 0; --i) {
        q.coeffs[i - 1] = carry;
        carry = coeffs[i - 1] + carry * root;
    }
    return q;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    size_t dd = divisor.degree();
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial rem = *this;
    size_t dn = rem.degree();
    if (is_zero()) return zero();
    if (dn < dd) throw std::invalid_argument("polynomial division leaves a remainder");
    Scalar lead_inv = divisor.coeffs[dd].inverse();
    Polynomial q;
    q.coeffs.assign(dn - dd + 1, Scalar::zero());
    for (size_t i = dn - dd + 1; i > 0; --i) {
        size_t shift = i - 1;
        Scalar cur = shift + dd < rem.coeffs.size() ? rem.coeffs[shift + dd] : Scalar::zero();
        if (cur.is_zero()) continue;
        Scalar coef = cur * lead_inv;
        q.coeffs[shift] = coef;
        for (size_t j = 0; j <= dd; ++j) {
            rem.coeffs[shift + j] = rem.coeffs[shift + j] - coef * divisor.coeffs[j];
        }
    }
    for (const Scalar& c : rem.coeffs) {
        if (!c.is_zero()) throw std::invalid_argument("polynomial division leaves a remainder");
    }
    return q;
}

Polynomial interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    if (xs.empty()) return Polynomial::zero();
    Polynomial full = vanishing(xs);
    Polynomial acc = Polynomial::zero();
    for (size_t i = 0; i < xs.size(); ++i) {
        Polynomial num = full.divide_by_linear(xs[i]);
        Scalar den = num.eval(xs[i]);
        if (den.is_zero()) throw std::invalid_argument("interpolate: repeated x value");
        Scalar scale = ys[i] * den.inverse();
        Polynomial term = num;
        for (Scalar& c : term.coeffs) c = c * scale;
        acc = acc + term;
    }
    acc.coeffs.resize(xs.size(), Scalar::zero());
    return acc;
}

Polynomial vanishing(std::span<const Scalar> xs) {
    Polynomial out = Polynomial::constant(Scalar::one());
    for (const Scalar& x : xs) {
        Polynomial lin;
        lin.coeffs = {-x, Scalar::one()};
        out = out * lin;
    }
    return out;
}

namespace {

constexpr size_t kMaxVectorSize = 4096;

/// Commitment over the monomial basis allowing degree up to n (one past the
/// public commit bound) so verifiers can commit the full-domain vanishing
/// polynomial.
GroupElement commit_monomial(const KzgParams& params, const Polynomial& poly) {
    if (poly.coeffs.empty()) return GroupElement::identity();
    size_t d = poly.degree();
    if (d + 1 > params.powers.size()) throw std::invalid_argument("polynomial degree too large");
    std::vector<Scalar> cs(poly.coeffs.begin(), poly.coeffs.begin() + d + 1);
    return group::multi_scalar_mul(cs, std::span<const GroupElement>(params.powers.data(), d + 1));
}

}  // namespace

KzgParams setup(size_t n, const Scalar& trapdoor) {
    if (n == 0) throw std::invalid_argument("setup: n must be at least 1");
    if (n > kMaxVectorSize) throw std::invalid_argument("setup: n exceeds supported size");
    for (size_t i = 0; i < n; ++i) {
        if (trapdoor == Scalar::from_u64(i))
            throw std::invalid_argument("setup: degenerate trapdoor inside evaluation domain");
    }

    KzgParams params;
    params.n = n;
    GroupElement g = GroupElement::generator();

    params.powers.reserve(n + 1);
    Scalar tau_pow = Scalar::one();
    for (size_t i = 0; i <= n; ++i) {
        params.powers.push_back(group::scalar_mul(tau_pow, g));
        tau_pow = tau_pow * trapdoor;
    }

    // psi_i(tau) = prod_j (tau - j) / ((tau - i) * prod_{j != i} (i - j))
    Scalar full = Scalar::one();
    std::vector<Scalar> domain(n);
    for (size_t i = 0; i < n; ++i) {
        domain[i] = Scalar::from_u64(i);
        full = full * (trapdoor - domain[i]);
    }
    params.lagrange_basis.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Scalar den = trapdoor - domain[i];
        for (size_t j = 0; j < n; ++j) {
            if (j != i) den = den * (domain[i] - domain[j]);
        }
        params.lagrange_basis.push_back(group::scalar_mul(full * den.inverse(), g));
    }
    return params;
}

KzgParams setup_seeded(size_t n, uint64_t seed) {
    Rng rng(seed ^ 0x6b7a674b7a67ULL);
    for (;;) {
        Scalar tau = Scalar::random(rng);
        bool degenerate = tau.is_zero();
        for (size_t i = 0; !degenerate && i < n; ++i) degenerate = tau == Scalar::from_u64(i);
        if (!degenerate) return setup(n, tau);
    }
}

Commitment commit_poly(const KzgParams& params, const Polynomial& poly) {
    if (poly.degree() >= params.n) throw std::invalid_argument("commit_poly: degree overflow");
    return {commit_monomial(params, poly)};
}

Commitment commit_vector(const KzgParams& params, std::span<const Scalar> v) {
    if (v.size() != params.n) throw std::invalid_argument("commit_vector: length mismatch");
    std::vector<Scalar> s(v.begin(), v.end());
    return {group::multi_scalar_mul(s, params.lagrange_basis)};
}

EvalProof create_witness(const KzgParams& params, const Polynomial& poly, const Scalar& point) {
    if (poly.degree() >= params.n) throw std::invalid_argument("create_witness: degree overflow");
    Scalar value = poly.eval(point);
    Polynomial shifted = poly - Polynomial::constant(value);
    Polynomial quotient = shifted.divide_by_linear(point);
    return {point, value, commit_monomial(params, quotient)};
}

bool verify_eval(const KzgParams& params, const Commitment& c, const Scalar& point,
                 const Scalar& value, const GroupElement& witness) {
    // e(C - value*g, g) == e(witness, g^tau - point*g)
    GroupElement lhs = c.point - group::scalar_mul(value, params.g());
    GroupElement shift = params.g_tau() - group::scalar_mul(point, params.g());
    return group::pairing_equal(lhs, params.g(), witness, shift);
}

Commitment update_commitment(const KzgParams& params, const Commitment& c, size_t index,
                             const Scalar& delta) {
    if (index >= params.n) throw std::out_of_range("update_commitment: index out of range");
    return {c.point + group::scalar_mul(delta, params.lagrange_basis[index])};
}

namespace {

bool indices_valid(std::span<const uint32_t> indices, size_t n) {
    if (indices.empty()) return false;
    for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= n) return false;
        for (size_t j = i + 1; j < indices.size(); ++j) {
            if (indices[i] == indices[j]) return false;
        }
    }
    return true;
}

std::vector<Scalar> index_scalars(std::span<const uint32_t> indices) {
    std::vector<Scalar> out;
    out.reserve(indices.size());
    for (uint32_t i : indices) out.push_back(Scalar::from_u64(i));
    return out;
}

}  // namespace

SubvectorProof prove_subvector(const KzgParams& params, std::span<const Scalar> v,
                               std::span<const uint32_t> indices) {
    if (v.size() != params.n) throw std::invalid_argument("prove_subvector: vector length mismatch");
    if (!indices_valid(indices, params.n))
        throw std::invalid_argument("prove_subvector: invalid index set");

    std::vector<Scalar> domain(params.n);
    for (size_t i = 0; i < params.n; ++i) domain[i] = Scalar::from_u64(i);
    std::vector<Scalar> vals(v.begin(), v.end());
    Polynomial phi = interpolate(domain, vals);

    std::vector<Scalar> xs = index_scalars(indices);
    std::vector<Scalar> ys;
    ys.reserve(indices.size());
    for (uint32_t i : indices) ys.push_back(v[i]);

    Polynomial remainder = interpolate(xs, ys);   // R_I
    Polynomial annihilator = vanishing(xs);       // A_I
    Polynomial quotient = (phi - remainder).divide_exact(annihilator);

    SubvectorProof proof;
    proof.indices.assign(indices.begin(), indices.end());
    std::sort(proof.indices.begin(), proof.indices.end());
    proof.values.reserve(proof.indices.size());
    for (uint32_t i : proof.indices) proof.values.push_back(v[i]);
    proof.witness = commit_monomial(params, quotient);
    return proof;
}

bool verify_subvector(const KzgParams& params, const Commitment& c,
                      std::span<const uint32_t> indices, std::span<const Scalar> values,
                      const GroupElement& witness) {
    if (indices.size() != values.size()) return false;
    if (!indices_valid(indices, params.n)) return false;

    std::vector<Scalar> xs = index_scalars(indices);
    std::vector<Scalar> ys(values.begin(), values.end());
    Polynomial remainder = interpolate(xs, ys);
    Polynomial annihilator = vanishing(xs);

    // e(C - g^{R_I(tau)}, g) == e(witness, g^{A_I(tau)})
    GroupElement lhs = c.point - commit_monomial(params, remainder);
    GroupElement rhs = commit_monomial(params, annihilator);
    return group::pairing_equal(lhs, params.g(), witness, rhs);
}

Bytes KzgParams::to_bytes() const {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(n));
    for (const auto& p : powers) w.prefixed(p.to_bytes());
    for (const auto& p : lagrange_basis) w.prefixed(p.to_bytes());
    return w.take();
}

std::optional<KzgParams> KzgParams::from_bytes(std::span<const uint8_t> in) {
    try {
        ByteReader r(in);
        KzgParams params;
        params.n = r.u32();
        if (params.n == 0 || params.n > kMaxVectorSize) return std::nullopt;
        for (size_t i = 0; i <= params.n; ++i) {
            auto p = GroupElement::from_bytes(r.prefixed());
            if (!p) return std::nullopt;
            params.powers.push_back(*p);
        }
        for (size_t i = 0; i < params.n; ++i) {
            auto p = GroupElement::from_bytes(r.prefixed());
            if (!p) return std::nullopt;
            params.lagrange_basis.push_back(*p);
        }
        if (!r.done()) return std::nullopt;
        return params;
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

}  // namespace sn::kzg
