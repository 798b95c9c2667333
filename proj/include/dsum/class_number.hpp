#pragma once

#include <cstdint>

#include "dsum/mean_square.hpp"
#include "dsum/rational.hpp"
#include "dsum/unit_group.hpp"

namespace dsum {

/// Invariants of the imaginary subfield K of Q(zeta_p) of degree m.
struct FieldContext {
    std::uint64_t p;
    std::uint64_t m;  // (K : Q), even
    std::uint64_t n;  // m / 2
    unsigned Q;       // Hasse unit index, 1 for cyclic K
    std::uint64_t w;  // roots of unity in K: 2p if m = p - 1, else 2
    BigInt d_K;       // p^(m-1)
    BigInt d_K_plus;  // p^(m/2-1)
};

/// Rejects p not an odd prime, m not dividing p - 1, or K not imaginary
/// (the Galois kernel of order (p-1)/m must be odd).
FieldContext field_context(std::uint64_t p, std::uint64_t m);

/// Gal(Q(zeta_p)/K) as a subgroup of (Z/pZ)^*.
Subgroup galois_kernel(std::uint64_t p, std::uint64_t m);

struct ClassNumberResult {
    BigInt h_minus;
    double residual;  // distance of the evaluated product to the nearest integer
};

/// h_K^- from the L(1, chi) product, evaluated with `digits` decimal digits
/// (50 or 100). Throws std::domain_error for p > 200 and std::runtime_error if
/// the product is not within 1e-4 of an integer.
ClassNumberResult relative_class_number(std::uint64_t p, std::uint64_t m, unsigned digits = 50);

/// w_K (p M(p, H) / (4 pi^2))^(m/4), with M(p, H) exact up to the final power.
double upper_bound_subfield(std::uint64_t p, std::uint64_t m);

/// Same bound for an arbitrary mean-square value M.
double bound_from_mean_square(std::uint64_t p, std::uint64_t m, const PiSquared& mean_square);

struct H3Bounds {
    double mean_square_bound;  // 2 (p M(p, H_3) / (4 pi^2))^((p-1)/12)
    double simplified_bound;   // 2 (p/24)^((p-1)/12)
};

/// Bounds for the degree (p-1)/3 field, p = 1 mod 6; throws std::logic_error if
/// the first exceeds the second.
H3Bounds upper_bound_h3_field(std::uint64_t p);

/// 2p (p/24)^((p-1)/4), the simplified bound for Q(zeta_p).
double cyclotomic_simplified_bound(std::uint64_t p);

/// (Q w / Pi(f, H)) · sqrt(d_K / d_K+) · (M(f, H) / 4 pi^2)^(n/2), n = #X_f^-(H).
double general_bound(std::uint64_t f, const Subgroup& h, unsigned Q, std::uint64_t w, double d_ratio_sqrt);

}  // namespace dsum
