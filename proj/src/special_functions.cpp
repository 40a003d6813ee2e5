#include "nmg/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nmg {

namespace {

constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// E1 by alternating series, good for 0 < x <= 1.
double e1_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -x / k;
        sum += term / k;
        if (std::abs(term / k) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return -euler_gamma - std::log(x) - sum;
}

// E1 by modified Lentz continued fraction, good for x > 1.
double e1_continued_fraction(double x) {
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

// Ei for x > 0: ascending series (all terms positive, no cancellation).
double ei_series_positive(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 400; ++k) {
        term *= x / k;
        sum += term / k;
        if (term / k < 1e-18 * sum) break;
    }
    return euler_gamma + std::log(x) + sum;
}

// Ei asymptotic expansion e^x/x * sum k!/x^k, truncated at the smallest term.
double ei_asymptotic(double x) {
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k < 80; ++k) {
        const double next = term * k / x;
        if (next >= term) break;  // divergent tail reached
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(x) / x * sum;
}

}  // namespace

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1 requires x > 0");
    return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double expint_ei(double x) {
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (x < 0.0) return -expint_e1(-x);
    return x < 40.0 ? ei_series_positive(x) : ei_asymptotic(x);
}

double dawson(double x) {
    const double ax = std::abs(x);
    const double sign = x < 0.0 ? -1.0 : 1.0;

    if (ax < 0.05) {
        // F(x) = x - 2x^3/3 + 4x^5/15 - 8x^7/105
        const double x2 = x * x;
        return x * (1.0 + x2 * (-2.0 / 3.0 + x2 * (4.0 / 15.0 - x2 * 8.0 / 105.0)));
    }
    if (ax > 6.5) {
        // F(x) ~ 1/(2x) [1 + 1/(2x^2) + 3/(4x^4) + 15/(8x^6) + 105/(16 x^8)]
        const double ix2 = 1.0 / (x * x);
        return 0.5 / x *
               (1.0 + ix2 * (0.5 + ix2 * (0.75 + ix2 * (1.875 + ix2 * 6.5625))));
    }

    // Rybicki's exponentially accurate sampling: F(x) = lim_{h->0}
    // (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n; truncation error
    // ~ exp(-pi^2/(4h^2)), far below double precision at h = 0.2.
    const double h = 0.2;
    const int n0 = 2 * static_cast<int>(ax / (2.0 * h)) + 1;  // odd node near ax/h
    const double xp = ax - n0 * h;
    double sum = 0.0;
    for (int m = -34; m <= 34; m += 2) {  // n = n0 + m runs over odd integers
        const int n = n0 + m;
        const double e = xp - m * h;  // ax - n h
        if (n != 0) sum += std::exp(-e * e) / n;
    }
    constexpr double inv_sqrt_pi = 0.56418958354775628694807945156077258;
    return sign * inv_sqrt_pi * sum;
}

}  // namespace nmg
