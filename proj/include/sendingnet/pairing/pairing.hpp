#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sendingnet/pairing/curves.hpp"

namespace sn::bn {

/// Element of the order-r target group GT inside Fp12.
struct Gt {
    Fp12 v;

    static Gt one() { return {Fp12::one()}; }
    bool operator==(const Gt& o) const { return v == o.v; }
    bool operator!=(const Gt& o) const { return !(*this == o); }
    Gt operator*(const Gt& o) const { return {v * o.v}; }
    Gt inverse() const { return {v.conjugate()}; }  // valid in the cyclotomic subgroup
    Gt pow(const U256& e) const { return {v.pow(e)}; }
    Gt pow(const Fr& e) const { return pow(e.to_u256()); }
};

/// Optimal ate pairing e(P, Q).
Gt pairing(const G1& P, const G2& Q);

/// prod_i e(P_i, Q_i) with a single shared final exponentiation.
Gt pairing_product(std::span<const std::pair<G1, G2>> pairs);

/// Miller loop only (no final exponentiation); exposed for pairing_product.
Fp12 miller_loop(const G1& P, const G2& Q);

Fp12 final_exponentiation(const Fp12& f);

/// Reference path: raises to (p^12 - 1)/r by plain square-and-multiply.
/// Slow; kept as an independent oracle for the structured path.
Fp12 final_exponentiation_naive(const Fp12& f);

}  // namespace sn::bn
