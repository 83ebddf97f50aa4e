#pragma once

#include <complex>

namespace zetacyl {

using Complex = std::complex<double>;

namespace specfun {

// Gamma function, Lanczos approximation with reflection for Re(s) < 1/2.
// Relative error <= 1e-13 on -5 < Re(s) < 10, |Im(s)| < 10.
// Throws PoleError at nonpositive integers.
Complex gamma(Complex s);

// log Gamma for real x > 0.
double lgamma_real(double x);

// Complementary error function, absolute error <= 1e-14 for |x| <= 30.
double erfc(double x);

// Scaled complement: erfcx(x) = exp(x^2) * erfc(x), x >= 0.
// Avoids underflow/overflow in products of the form e^{c} * erfc(z).
double erfcx(double x);

// Hurwitz zeta via Euler-Maclaurin, a > 0, relative error <= 1e-11 for |s| <= 10.
// Throws PoleError at s = 1.
Complex hurwitz_zeta(Complex s, double a);

// d/ds zeta_H(s, a) at s = 0, equal to lgamma(a) - (1/2) log(2 pi).
double hurwitz_zeta_deriv0(double a);

// F(s) = Gamma(s+1/2)/(4 s sqrt(pi)) - Gamma(s)/4, evaluated with the 1/s
// singularity cancelled analytically near s = 0; F(0) = -(log 2)/2.
Complex gamma_limit_f(Complex s);

// Upper incomplete gamma Gamma(s, x), x > 0; continued fraction for
// x > |s| + 1, series otherwise. Relative error <= 1e-12.
Complex incomplete_gamma_upper(Complex s, double x);

// Exponential integral E1(x) = Gamma(0, x), x > 0.
double expint_e1(double x);

// Riemann zeta at integer k >= 2 (cached).
double riemann_zeta_int(int k);

}  // namespace specfun

// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace zetacyl
