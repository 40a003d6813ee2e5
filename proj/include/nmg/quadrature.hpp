// quadrature.hpp — adaptive Gauss-Kronrod, principal-value integrals, and
// Filon-type oscillatory quadrature over frequency bands

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nmg/errors.hpp"
#include "nmg/types.hpp"

namespace nmg {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 20;
};

// Adaptive G7-K15 on a finite interval. Throws QuadratureNotConverged when the
// depth budget runs out before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {});
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const QuadOptions& opts = {});

// Cauchy principal value of int_a^b f(x) / (omega - x) dx with omega in (a,b),
// by subtraction: int [f(x)-f(omega)]/(omega-x) dx + f(omega) log|(omega-a)/(omega-b)|.
double principal_value(const std::function<double(double)>& f, double a, double b,
                       double omega, const QuadOptions& opts = {});

// One quadratic-interpolation (Filon-Simpson) panel: integrates
// f(omega) e^{-i omega t} over [a, b] exactly in the oscillation for any t,
// with f replaced by its quadratic interpolant through the three stored samples.
template <typename Value>
struct FilonPanel {
    double a{0.0};
    double b{0.0};
    Value fa{};
    Value fm{};
    Value fb{};
};

// Oscillatory moments int_{-1}^{1} x^k e^{-i theta x} dx for k = 0, 1, 2.
void filon_moments(double theta, Complex& m0, Complex& m1, Complex& m2);

template <typename Value>
Value filon_panel_eval(const FilonPanel<Value>& p, double t) {
    const double half = 0.5 * (p.b - p.a);
    const double mid = 0.5 * (p.a + p.b);
    Complex m0, m1, m2;
    filon_moments(t * half, m0, m1, m2);
    const Value c1 = 0.5 * (p.fb - p.fa);
    const Value c2 = 0.5 * (p.fb + p.fa) - p.fm;
    const Value shape = p.fm * m0 + c1 * m1 + c2 * m2;
    return (half * std::exp(Complex{0.0, -mid * t})) * shape;
}

// Panel table built once per integrand; evaluates int f e^{-i omega t} at any t.
// Panels are refined adaptively on f itself (Simpson error estimate), so the
// accuracy is t-independent.
class FilonTable {
  public:
    FilonTable() = default;

    // f sampled on [a, b]; tol is an absolute tolerance on int |f|.
    void add_interval(const std::function<Complex(double)>& f, double a, double b,
                      double tol, int max_depth = 24);

    Complex evaluate(double t) const;

    // t = 0 value, i.e. plain int f domega (sum-rule uses this).
    Complex integral() const { return evaluate(0.0); }

    std::size_t panel_count() const { return panels_.size(); }

  private:
    std::vector<FilonPanel<Complex>> panels_;

    void refine(const std::function<Complex(double)>& f, double a, Complex fa,
                double b, Complex fb, Complex fm, double tol, int depth,
                int max_depth);
};

}  // namespace nmg
