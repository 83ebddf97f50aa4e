#include "zetacyl/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "zetacyl/errors.hpp"

namespace zetacyl::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos coefficients, g = 607/128, n = 15.
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Complex s) {
    if (s.imag() != 0.0) return false;
    double r = s.real();
    return r <= 0.0 && r == std::floor(r);
}

// Lanczos series A(z) for Re(z) >= 1/2.
Complex lanczos_sum(Complex z) {
    Complex acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (z + double(k - 1));
    return acc;
}

Complex gamma_positive_half_plane(Complex z) {
    Complex t = z + (kLanczosG - 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * lanczos_sum(z);
}

Complex cexpm1(Complex w) {
    if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
    // w * (1 + w/2 (1 + w/3 (...))) from the inside out
    Complex acc = 0.0;
    for (int k = 24; k >= 2; --k) acc = (w / double(k)) * (1.0 + acc);
    return w * (1.0 + acc);
}

// erf by Taylor series, |x| < 1.
double erf_series(double x) {
    double x2 = x * x;
    double term = x;
    KahanSum s;
    s.add(term);
    for (int n = 1; n < 60; ++n) {
        term *= -x2 / double(n);
        double add = term / double(2 * n + 1);
        s.add(add);
        if (std::fabs(add) < 1e-18 * std::fabs(s.value()) + 1e-300) break;
    }
    return (2.0 / kSqrtPi) * s.value();
}

// Continued fraction for erfcx(x) = e^{x^2} erfc(x), x >= 2 (Lentz).
double erfcx_cf(double x) {
    const double tiny = 1e-300;
    double b = x;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int n = 1; n < 300; ++n) {
        double a = 0.5 * n;
        b = x;  // partial denominators alternate x with coefficient a_n = n/2
        double dn = b + a * d;
        if (std::fabs(dn) < tiny) dn = tiny;
        double cn = b + a / c;
        if (std::fabs(cn) < tiny) cn = tiny;
        d = 1.0 / dn;
        double delta = cn * d;
        h *= delta;
        c = cn;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return h / kSqrtPi;
}

// Lower incomplete gamma by series: gamma(s, x) = x^s e^{-x} sum x^n / (s (s+1) ... (s+n)).
Complex lower_gamma_series(Complex s, double x) {
    Complex denom = s;
    Complex term = 1.0 / s;
    Complex total = term;
    for (int n = 1; n < 500; ++n) {
        denom += 1.0;
        term *= x / denom;
        total += term;
        if (std::abs(term) < 1e-17 * std::abs(total)) break;
    }
    return std::pow(Complex(x), s) * std::exp(-x) * total;
}

// Continued fraction for Gamma(s, x), x > |s| + 1 (Lentz).
Complex upper_gamma_cf(Complex s, double x) {
    const double tiny = 1e-300;
    Complex b = x + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int n = 1; n < 400; ++n) {
        Complex an = -double(n) * (double(n) - s);
        b += 2.0;
        Complex dn = an * d + b;
        if (std::abs(dn) < tiny) dn = tiny;
        Complex cn = b + an / c;
        if (std::abs(cn) < tiny) cn = tiny;
        d = 1.0 / dn;
        Complex delta = cn * d;
        h *= delta;
        c = cn;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) * std::pow(Complex(x), s) * h;
}

}  // namespace

Complex gamma(Complex s) {
    if (is_nonpositive_integer(s)) throw PoleError(s);
    if (s.real() >= 0.5) return gamma_positive_half_plane(s);
    // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
    Complex sinpis = std::sin(kPi * s);
    return kPi / (sinpis * gamma_positive_half_plane(1.0 - s));
}

double lgamma_real(double x) {
    if (x <= 0.0) throw PoleError(Complex(x, 0.0));
    if (x < 0.5) {
        // log Gamma(x) = log pi - log sin(pi x) - log Gamma(1 - x)
        return std::log(kPi) - std::log(std::sin(kPi * x)) - lgamma_real(1.0 - x);
    }
    Complex a = lanczos_sum(Complex(x, 0.0));
    double t = x + (kLanczosG - 0.5);
    return 0.5 * kLog2Pi + (x - 0.5) * std::log(t) - t + std::log(a.real());
}

double erfcx(double x) {
    if (x < 0.0) return std::exp(x * x) * erfc(x);
    if (x >= 2.0) return erfcx_cf(x);
    return std::exp(x * x) * erfc(x);
}

double erfc(double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < 0.5) return 1.0 - erf_series(x);
    if (x >= 2.0) {
        double x2 = x * x;
        if (x2 > 745.0) return 0.0;  // below double underflow anyway
        return std::exp(-x2) * erfcx_cf(x);
    }
    // 0.5 <= x < 2: erfc(x) = Gamma(1/2, x^2) / sqrt(pi) via the lower series.
    Complex g = lower_gamma_series(Complex(0.5), x * x);
    return (kSqrtPi - g.real()) / kSqrtPi;
}

Complex hurwitz_zeta(Complex s, double a) {
    if (a <= 0.0) throw std::invalid_argument("hurwitz_zeta: a must be positive");
    if (std::abs(s - Complex(1.0)) < 1e-12) throw PoleError(s);

    // Euler-Maclaurin with N direct terms and J Bernoulli corrections.
    const int n_direct = std::max(18, int(std::ceil(std::abs(s))) + 12);
    const int j_terms = 14;
    static const double b2j[15] = {
        0.0,                    // unused
        1.0 / 6.0,              -1.0 / 30.0,            1.0 / 42.0,
        -1.0 / 30.0,            5.0 / 66.0,             -691.0 / 2730.0,
        7.0 / 6.0,              -3617.0 / 510.0,        43867.0 / 798.0,
        -174611.0 / 330.0,      854513.0 / 138.0,       -236364091.0 / 2730.0,
        8553103.0 / 6.0,        -23749461029.0 / 870.0,
    };

    KahanSum re, im;
    for (int k = 0; k < n_direct; ++k) {
        Complex term = std::pow(Complex(double(k) + a), -s);
        re.add(term.real());
        im.add(term.imag());
    }
    Complex direct(re.value(), im.value());

    const double q = double(n_direct) + a;
    Complex qs = std::pow(Complex(q), -s);
    Complex tail = qs * q / (s - 1.0);  // integral term q^{1-s}/(s-1)
    tail += 0.5 * qs;

    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * q^{-s-2j+1}
    Complex poch = s;                 // rising product up to s+2j-2
    Complex qpow = qs / q;            // q^{-s-2j+1}, starting at j = 1
    double fact = 2.0;                // (2j)!
    Complex corr = 0.0;
    for (int j = 1; j <= j_terms; ++j) {
        corr += (b2j[j] / fact) * poch * qpow;
        // advance: multiply Pochhammer by (s+2j-1)(s+2j), factorial to (2j+2)!
        poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
        fact *= double(2 * j + 1) * double(2 * j + 2);
        qpow /= q * q;
    }
    return direct + tail + corr;
}

double hurwitz_zeta_deriv0(double a) { return lgamma_real(a) - 0.5 * kLog2Pi; }

double riemann_zeta_int(int k) {
    static std::vector<double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.assign(64, 0.0);
        for (int n = 2; n < 64; ++n) cache[n] = hurwitz_zeta(Complex(double(n)), 1.0).real();
    }
    return cache.at(size_t(k));
}

Complex gamma_limit_f(Complex s) {
    constexpr double kLog2 = 0.69314718055994530942;
    if (std::abs(s) >= 0.1) {
        return gamma(s + 0.5) / (4.0 * s * kSqrtPi) - gamma(s) / 4.0;
    }
    // F(s) = [Gamma(s+1/2)/sqrt(pi) - Gamma(s+1)] / (4 s)
    //      = e^{q(s)} expm1(p(s) - q(s)) / (4 s)
    // with p = log(Gamma(s+1/2)/sqrt(pi)), q = log Gamma(1+s), both as standard
    // zeta series; p - q starts at -2 log(2) s, so the ratio is regular at 0.
    Complex q = -kEulerGamma * s;
    Complex pq = -2.0 * kLog2 * s;
    Complex sk = s;
    for (int k = 2; k <= 40; ++k) {
        sk *= s;
        double zk = riemann_zeta_int(k);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        q += sign * zk * sk / double(k);
        pq += sign * (std::pow(2.0, k) - 2.0) * zk * sk / double(k);
        if (std::abs(sk) * zk * std::pow(2.0, k) < 1e-19) break;
    }
    if (s == Complex(0.0)) return -0.5 * kLog2;
    return std::exp(q) * cexpm1(pq) / (4.0 * s);
}

Complex incomplete_gamma_upper(Complex s, double x) {
    if (x <= 0.0) throw std::invalid_argument("incomplete_gamma_upper: x must be positive");
    if (x > std::abs(s) + 1.0) return upper_gamma_cf(s, x);
    if (s == Complex(0.0)) return Complex(expint_e1(x));
    if (is_nonpositive_integer(s)) {
        // raise by recurrence Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s
        Complex up = incomplete_gamma_upper(s + 1.0, x);
        return (up - std::pow(Complex(x), s) * std::exp(-x)) / s;
    }
    if (s.real() <= 0.0) {
        Complex up = incomplete_gamma_upper(s + 1.0, x);
        return (up - std::pow(Complex(x), s) * std::exp(-x)) / s;
    }
    return gamma(s) - lower_gamma_series(s, x);
}

double expint_e1(double x) {
    if (x <= 0.0) throw std::invalid_argument("expint_e1: x must be positive");
    if (x > 1.0) return upper_gamma_cf(Complex(0.0), x).real();
    // E1(x) = -gamma - log x + sum (-1)^{n+1} x^n / (n n!)
    double term = 1.0;
    KahanSum s;
    for (int n = 1; n < 60; ++n) {
        term *= -x / double(n);
        s.add(-term / double(n));
        if (std::fabs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + s.value();
}

}  // namespace zetacyl::specfun
