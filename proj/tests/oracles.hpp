// Test-side oracles, kept independent of the library implementation paths
// they are used to check: a hand-rolled adaptive Simpson, direct summation
// helpers, a short Euler-Maclaurin zeta, and a shooting-method eigensolver.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Euler-Maclaurin Hurwitz zeta with three Bernoulli corrections; good to
// ~1e-12 for moderate real s.
inline double hurwitz(double s, double a) {
    const int n = 40;
    double acc = 0.0;
    for (int k = n - 1; k >= 0; --k) acc += std::pow(k + a, -s);
    double q = n + a;
    acc += std::pow(q, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(q, -s);
    acc += s * std::pow(q, -s - 1.0) / 12.0;
    acc += -s * (s + 1.0) * (s + 2.0) * std::pow(q, -s - 3.0) / 720.0;
    acc += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(q, -s - 5.0) / 30240.0;
    return acc;
}

// RK4 shooting for -y'' + lambda^2 y = mu y on [0, l]: integrates the left
// boundary data across and returns the right boundary functional. Boundary
// encoding: 0 Dirichlet, 1 Neumann, +2 outward Robin +lambda, -2 outward
// Robin -lambda.
inline double shoot(double lambda, double l, int left, int right, double mu, int steps = 4000) {
    double y, yp;
    if (left == 0) {
        y = 0.0;
        yp = 1.0;
    } else if (left == 1) {
        y = 1.0;
        yp = 0.0;
    } else {
        y = 1.0;
        yp = (left == 2) ? -lambda : lambda;  // outward at 0 is -d/du
    }
    double h = l / steps;
    double w2 = mu - lambda * lambda;
    auto f = [&](double yy) { return -w2 * yy; };  // y'' = (lambda^2 - mu) y
    for (int i = 0; i < steps; ++i) {
        double k1y = yp, k1p = f(y);
        double k2y = yp + 0.5 * h * k1p, k2p = f(y + 0.5 * h * k1y);
        double k3y = yp + 0.5 * h * k2p, k3p = f(y + 0.5 * h * k2y);
        double k4y = yp + h * k3p, k4p = f(y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    if (right == 0) return y;
    if (right == 1) return yp;
    return (right == 2) ? yp - lambda * y : yp + lambda * y;
}

// Bisect the shooting functional for the first count eigenvalues above
// lambda^2 (oscillatory branch only).
inline std::vector<double> shoot_eigenvalues(double lambda, double l, int left, int right,
                                             int count) {
    std::vector<double> out;
    double l2 = lambda * lambda;
    double prev_mu = l2 + 1e-9;
    double prev_f = shoot(lambda, l, left, right, prev_mu);
    double domega = 3.14159265358979323846 / l / 24.0;
    for (int i = 1; int(out.size()) < count && i < 24 * 40 * (count + 2); ++i) {
        double omega = i * domega;
        double mu = l2 + omega * omega;
        double fv = shoot(lambda, l, left, right, mu);
        if ((prev_f < 0.0) != (fv < 0.0)) {
            double lo = prev_mu, hi = mu, flo = prev_f;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = shoot(lambda, l, left, right, mid);
                if ((flo < 0.0) != (fm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev_mu = mu;
        prev_f = fv;
    }
    return out;
}

}  // namespace oracles
