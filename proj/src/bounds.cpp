#include "kanti/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kanti::bounds {
namespace {

void require_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma < 0.5)) throw std::invalid_argument("edge density must lie in [0, 1/2)");
}

std::int64_t block_product(int l) {
    if (l < 3) throw std::invalid_argument("largest level must be at least 3");
    return static_cast<std::int64_t>(l / 2) * ((l + 1) / 2);
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("rational needs a positive denominator");
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational operator+(const Rational& a, const Rational& b) { return Rational::make(a.num * b.den + b.num * a.den, a.den * b.den); }

Rational thm1_coeff(int l) {
    const std::int64_t p = block_product(l);
    return Rational::make(p - 1, 4 * p);
}

Rational antichain_coeff(int l) {
    const std::int64_t p = block_product(l);
    return Rational::make(p + 1, 4 * p);
}

double gamma_of(std::int64_t edges, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    return static_cast<double>(edges) / (static_cast<double>(n) * static_cast<double>(n));
}

double first_bound(double gamma) {
    require_gamma(gamma);
    return 4.0 * gamma / 5.0;
}

double triangle_lower(double gamma) {
    require_gamma(gamma);
    if (gamma > 1.0 / 3.0) throw std::domain_error("triangle bound is only real for edge density <= 1/3");
    const double value = (9.0 * gamma - 2.0 - 2.0 * std::pow(1.0 - 3.0 * gamma, 1.5)) / 27.0;
    return value < 0.0 ? 0.0 : value;
}

double second_bound(double gamma) {
    if (!(gamma >= 0.25 && gamma <= 1.0 / 3.0)) throw std::domain_error("second bound needs edge density in [1/4, 1/3]");
    return (2.0 + 2.0 * std::pow(1.0 - 3.0 * gamma, 1.5)) / 9.0;
}

double gamma_star() {
    // first_bound - second_bound is increasing, negative at 1/4, positive at 1/3.
    double lo = 0.25;
    double hi = 1.0 / 3.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (first_bound(mid) < second_bound(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double gamma_star_closed_form() { return (39.0 + std::sqrt(21.0)) / 150.0; }

double thm2_constant() { return 2.0 * (39.0 + std::sqrt(21.0)) / 375.0; }

double corollary_lower_coeff() { return (219.0 - 4.0 * std::sqrt(21.0)) / 750.0; }

double lemma5_cap(std::int64_t n, std::int64_t c4_count) {
    if (n < 5) throw std::invalid_argument("triangle cap needs n >= 5");
    return static_cast<double>(n - 4) * static_cast<double>(c4_count) / 3.0;
}

}  // namespace kanti::bounds
