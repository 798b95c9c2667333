#include "dsum/class_number.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dsum/arith.hpp"

namespace dsum {

FieldContext field_context(std::uint64_t p, std::uint64_t m) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("field_context: p must be an odd prime");
    if (m == 0 || m % 2 != 0 || (p - 1) % m != 0) throw std::invalid_argument("field_context: m must be an even divisor of p - 1");
    if (((p - 1) / m) % 2 == 0) throw std::invalid_argument("field_context: the field of this degree is real");
    FieldContext ctx{p, m, m / 2, 1, m == p - 1 ? 2 * p : 2, 1, 1};
    for (std::uint64_t i = 0; i + 1 < m; ++i) ctx.d_K *= p;
    for (std::uint64_t i = 0; i + 1 < m / 2; ++i) ctx.d_K_plus *= p;
    return ctx;
}

Subgroup galois_kernel(std::uint64_t p, std::uint64_t m) {
    field_context(p, m);
    return subgroup_of_order((p - 1) / m, p);
}

namespace {

template <typename Real>
ClassNumberResult class_number_product(std::uint64_t p, std::uint64_t m) {
    const FieldContext ctx = field_context(p, m);
    const auto chars = odd_characters_trivial_on(galois_kernel(p, m));
    const Real pi = boost::math::constants::pi<Real>();
    const std::uint64_t L = chars.front().table().exponent();

    std::vector<Real> cot(p), cs(L), sn(L);
    for (std::uint64_t a = 1; a < p; ++a) {
        const Real x = pi * a / p;
        cot[a] = cos(x) / sin(x);
    }
    for (std::uint64_t k = 0; k < L; ++k) {
        const Real x = 2 * pi * k / L;
        cs[k] = cos(x);
        sn[k] = sin(x);
    }

    Real re = 1, im = 0;
    for (const auto& chi : chars) {
        Real lre = 0, lim = 0;
        for (std::uint64_t a = 1; a < p; ++a) {
            const auto ph = chi.phase(static_cast<std::int64_t>(a));
            lre += cs[*ph] * cot[a];
            lim += sn[*ph] * cot[a];
        }
        const Real scale = pi / (2 * p);
        lre *= scale;
        lim *= scale;
        const Real nre = re * lre - im * lim;
        im = re * lim + im * lre;
        re = nre;
    }
    Real h = Real(ctx.Q) * Real(ctx.w) / pow(2 * pi, Real(ctx.n)) * sqrt(pow(Real(p), Real(ctx.n))) * re;
    const Real rounded = round(h);
    const double residual = static_cast<double>(abs(h - rounded));
    const double imag_residual = static_cast<double>(abs(Real(ctx.Q) * Real(ctx.w) / pow(2 * pi, Real(ctx.n)) *
                                                         sqrt(pow(Real(p), Real(ctx.n))) * im));
    if (residual >= 1e-4 || imag_residual >= 1e-4)
        throw std::runtime_error("relative_class_number: insufficient precision (residual " + std::to_string(residual) + ")");
    if (rounded < 1) throw std::logic_error("relative_class_number: non-positive result");
    return {rounded.template convert_to<BigInt>(), residual};
}

}  // namespace

ClassNumberResult relative_class_number(std::uint64_t p, std::uint64_t m, unsigned digits) {
    if (p > 200) throw std::domain_error("relative_class_number: p exceeds the precision budget (p <= 200)");
    using namespace boost::multiprecision;
    if (digits <= 50) return class_number_product<cpp_bin_float_50>(p, m);
    return class_number_product<cpp_bin_float_100>(p, m);
}

double bound_from_mean_square(std::uint64_t p, std::uint64_t m, const PiSquared& mean_square) {
    const FieldContext ctx = field_context(p, m);
    // p M / (4 pi^2) = p · coefficient / 4 exactly.
    const ExactRational base = ExactRational(BigInt(p)) * mean_square.coefficient / ExactRational(4);
    return static_cast<double>(ctx.w) * std::pow(base.to_double(), static_cast<double>(m) / 4.0);
}

double upper_bound_subfield(std::uint64_t p, std::uint64_t m) {
    return bound_from_mean_square(p, m, mean_square_exact(p, galois_kernel(p, m)));
}

H3Bounds upper_bound_h3_field(std::uint64_t p) {
    if (p % 6 != 1 || !is_prime(p)) throw std::invalid_argument("upper_bound_h3_field: p must be a prime = 1 mod 6");
    const double exponent = static_cast<double>(p - 1) / 12.0;
    const PiSquared M = mean_square_exact(p, subgroup_of_order(3, p));
    const ExactRational base = ExactRational(BigInt(p)) * M.coefficient / ExactRational(4);
    H3Bounds b{2.0 * std::pow(base.to_double(), exponent),
               2.0 * std::pow(static_cast<double>(p) / 24.0, exponent)};
    if (b.mean_square_bound > b.simplified_bound)
        throw std::logic_error("upper_bound_h3_field: mean-square bound exceeds the simplified bound");
    return b;
}

double cyclotomic_simplified_bound(std::uint64_t p) {
    return 2.0 * static_cast<double>(p) * std::pow(static_cast<double>(p) / 24.0, static_cast<double>(p - 1) / 4.0);
}

double general_bound(std::uint64_t f, const Subgroup& h, unsigned Q, std::uint64_t w, double d_ratio_sqrt) {
    if (Q != 1 && Q != 2) throw std::invalid_argument("general_bound: Q must be 1 or 2");
    const double pi_corr = euler_correction_pi(f, h);
    const PiSquared M = mean_square_exact(f, h);
    const auto n = static_cast<double>(odd_characters_trivial_on(h).size());
    const double base = (M.coefficient / ExactRational(4)).to_double();
    return static_cast<double>(Q) * static_cast<double>(w) / pi_corr * d_ratio_sqrt * std::pow(base, n / 2.0);
}

}  // namespace dsum
