// special_functions.hpp — exponential integral and Dawson function
//
// The Ohmic-family self-energy closed forms need Ei on both signs of the
// argument (principal-value branch for x > 0) and Dawson's integral
// F(x) = exp(-x^2) int_0^x exp(t^2) dt for the on-band real part.

#pragma once

namespace nmg {

// Exponential integral Ei(x). For x > 0 this is the Cauchy principal value
// of int_{-inf}^{x} e^t / t dt. Ei(-x) = -E1(x) for x > 0.
double expint_ei(double x);

// E1(x) = int_x^inf e^{-t}/t dt, x > 0.
double expint_e1(double x);

// Dawson's integral F(x); odd in x, F(x) ~ 1/(2x) for large x.
double dawson(double x);

}  // namespace nmg
