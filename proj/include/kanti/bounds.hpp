#pragma once

#include <cstdint>
#include <string>

namespace kanti::bounds {

/// Exact non-negative fraction, always reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
};

/// Leading coefficient (floor(l/2)ceil(l/2) - 1) / (4 floor(l/2)ceil(l/2)) of
/// the maximum objective |E| - sum |A_k| when 3 is in K. l >= 3.
[[nodiscard]] Rational thm1_coeff(int l);
/// Leading coefficient of the minimum maximal K-antichain size; equals
/// 1/2 - thm1_coeff(l).
[[nodiscard]] Rational antichain_coeff(int l);

/// Edge density gamma = |E| / n^2, in [0, 1/2).
[[nodiscard]] double gamma_of(std::int64_t edges, std::int64_t n);

/// 4 gamma / 5: objective coefficient from removing K4s. gamma in [0, 1/2).
[[nodiscard]] double first_bound(double gamma);
/// (9 gamma - 2 - 2 (1 - 3 gamma)^{3/2}) / 27, clamped at 0. Triangle density
/// lower bound for a graph of edge density gamma in [0, 1/3]; throws
/// std::domain_error on (1/3, 1/2) and std::invalid_argument outside [0, 1/2).
[[nodiscard]] double triangle_lower(double gamma);
/// (2 + 2 (1 - 3 gamma)^{3/2}) / 9 for gamma in [1/4, 1/3].
[[nodiscard]] double second_bound(double gamma);

/// Root of first_bound = second_bound on [1/4, 1/3], by bisection.
[[nodiscard]] double gamma_star();
/// (39 + sqrt 21) / 150.
[[nodiscard]] double gamma_star_closed_form();
/// 2 (39 + sqrt 21) / 375, the absolute objective coefficient for K = {2,4}.
[[nodiscard]] double thm2_constant();
/// (219 - 4 sqrt 21) / 750, the matching antichain-size lower coefficient.
[[nodiscard]] double corollary_lower_coeff();

/// Leading term (n - 4) c4 / 3 of the triangle cap for {2,4}-saturated
/// graphs; the o(n^3) remainder is not included. n >= 5.
[[nodiscard]] double lemma5_cap(std::int64_t n, std::int64_t c4_count);

}  // namespace kanti::bounds
