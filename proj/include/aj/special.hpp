#pragma once

namespace aj {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series for x < a + 1, Lentz continued fraction otherwise; relative error
// around 1e-14, which survives being raised to the 12th power downstream.
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Exponential integral E1(x), x > 0.
double expint_e1(double x);

// Gaussian tail Q(x) = P(N(0,1) > x).
double gauss_q(double x);

} // namespace aj
