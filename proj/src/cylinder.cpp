#include "zetacyl/cylinder.hpp"

#include <cmath>
#include <functional>

#include "zetacyl/errors.hpp"
#include "zetacyl/quadrature.hpp"

namespace zetacyl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

double gauss_factor(double t, double d) { return std::exp(-d * d / (4.0 * t)); }

// int (1 - phi(u)) e^{-u^2/t} du: ramp part by quadrature, closed erfc tail.
double complement_window(const CutoffFunction& phi, double t) {
    double band = 0.0;
    if (phi.kind == CutoffFunction::Kind::SmoothStepQuintic && phi.a * phi.a / t < 745.0) {
        band = quad::integrate(
            [&](double u) { return (1.0 - phi.value(u)) * std::exp(-u * u / t); }, phi.a, phi.b,
            {1e-15, 1e-12, 2000});
    }
    double st = std::sqrt(t);
    return band + 0.5 * kSqrtPi * st * specfun::erfc(phi.b / st);
}

// int phi(u) e^{-u^2/t} du via the full Gaussian minus the complement.
double cutoff_window(const CutoffFunction& phi, double t) {
    return 0.5 * kSqrtPi * std::sqrt(t) - complement_window(phi, t);
}

double cutoff_mass(const CutoffFunction& phi) {
    if (phi.kind == CutoffFunction::Kind::Indicator) return phi.a;
    return phi.a + quad::integrate([&](double u) { return phi.value(u); }, phi.a, phi.b,
                                   {1e-14, 1e-12, 2000});
}

// Mellin integral int_0^inf t^{s-1} f(t) dt, split at t = 1: the lower piece
// in x = sqrt(t) (absorbs half-power endpoints), the tail via t -> 1/t.
Complex mellin(Complex s, const std::function<double(double)>& f, double abs_tol = 1e-11) {
    quad::QuadOptions opt{abs_tol, 1e-11, 8000};
    Complex small = quad::integrate(
        [&](double x) { return 2.0 * std::pow(Complex(x), 2.0 * s - 1.0) * f(x * x); }, 0.0, 1.0,
        opt);
    Complex large = quad::integrate(
        [&](double x) { return std::pow(Complex(x), -s - 1.0) * f(1.0 / x); }, 0.0, 1.0, opt);
    return small + large;
}

// int_1^inf t^{s-3/2} Tr_Y e^{-t B^2} dt as a mode sum of upper incomplete
// gamma values, truncated on the e^{-lambda^2} envelope.
Complex heat_mellin_tail_gamma(const TangentialSpectrum& spec, Complex s) {
    Complex acc = 0.0;
    for (const auto& e : spec.entries()) {
        double l2 = e.lambda * e.lambda;
        Complex term = 2.0 * double(e.multiplicity) * std::pow(Complex(l2), 0.5 - s) *
                       specfun::incomplete_gamma_upper(s - 0.5, l2);
        acc += term;
        if (std::abs(term) < 1e-16 * (std::abs(acc) + 1e-30) && l2 > 4.0) break;
    }
    return acc;
}

}  // namespace

namespace cylinder_detail {

double erfc_mode_sum(const TangentialSpectrum& spec, double t, double u, bool weight_lambda) {
    // e^{2 u lambda} erfc(u/sqrt t + lambda sqrt t) = erfcx(z) e^{-u^2/t - lambda^2 t}
    double st = std::sqrt(t);
    double gu = std::exp(-u * u / t);
    if (gu == 0.0) return 0.0;
    KahanSum acc;
    for (const auto& e : spec.entries()) {
        double z = u / st + e.lambda * st;
        double term = specfun::erfcx(z) * gu * std::exp(-e.lambda * e.lambda * t);
        if (weight_lambda) term *= e.lambda;
        term *= e.multiplicity;
        acc.add(term);
        if (term < 1e-17 * (std::fabs(acc.value()) + 1e-30) && e.lambda * st > 1.0) break;
    }
    return acc.value();
}

}  // namespace cylinder_detail

double scalar_kernel(ScalarKernelKind kind, double lambda, double t, double u, double v) {
    if (!(t > 0.0)) throw std::invalid_argument("scalar_kernel: t must be positive");
    if (lambda < 0.0) throw std::invalid_argument("scalar_kernel: lambda must be >= 0");
    double norm = 1.0 / std::sqrt(4.0 * kPi * t);
    double mass = std::exp(-lambda * lambda * t);
    double direct = norm * gauss_factor(t, u - v);
    switch (kind) {
        case ScalarKernelKind::FreeLine:
            return mass * direct;
        case ScalarKernelKind::DirichletHalfLine:
            return mass * (direct - norm * gauss_factor(t, u + v));
        case ScalarKernelKind::NeumannHalfLine:
            return mass * (direct + norm * gauss_factor(t, u + v));
        case ScalarKernelKind::APSRobinHalfLine: {
            double w = u + v;
            double z = w / (2.0 * std::sqrt(t)) + lambda * std::sqrt(t);
            // lambda e^{lambda w} erfc(z) = lambda erfcx(z) e^{-w^2/4t - lambda^2 t}
            double corr = lambda * specfun::erfcx(z) * gauss_factor(t, w) * mass;
            return mass * (direct + norm * gauss_factor(t, w)) - corr;
        }
    }
    throw std::logic_error("scalar_kernel: unreachable");
}

std::pair<ScalarKernelKind, ScalarKernelKind> mode_pair_kernels(PairBc bc, double lambda) {
    if (!(lambda > 0.0)) throw NonPositiveEigenvalue("mode_pair_kernels: lambda must be positive");
    switch (bc) {
        case PairBc::ChiralPlus:
            return {ScalarKernelKind::DirichletHalfLine, ScalarKernelKind::NeumannHalfLine};
        case PairBc::ChiralMinus:
            return {ScalarKernelKind::NeumannHalfLine, ScalarKernelKind::DirichletHalfLine};
        case PairBc::APS:
            return {ScalarKernelKind::DirichletHalfLine, ScalarKernelKind::APSRobinHalfLine};
    }
    throw std::logic_error("mode_pair_kernels: unreachable");
}

TwoSides chiral_boundary_identity(const TangentialSpectrum& spec, double t, double R) {
    if (!(t > 0.0) || !(R > 0.0))
        throw std::invalid_argument("chiral_boundary_identity: t, R must be positive");
    double norm = 1.0 / std::sqrt(4.0 * kPi * t);
    quad::QuadOptions opt{1e-15, 1e-14, 4000};
    double i_minus =
        quad::integrate([&](double u) { return 1.0 - std::exp(-u * u / t); }, 0.0, R, opt);
    double i_plus =
        quad::integrate([&](double u) { return 1.0 + std::exp(-u * u / t); }, 0.0, R, opt);
    double half_trace = spec.half_heat_trace(t);
    // four integrals: (1-e)P+ + (1+e)P- from one chirality and the swap
    double lhs = norm * (i_minus + i_plus + i_plus + i_minus) * half_trace;
    double rhs = norm * 2.0 * R * spec.heat_trace_y(t);
    return {lhs, rhs};
}

TSplit t_split(const TangentialSpectrum& spec, Complex s, const CutoffFunction& phi) {
    if (s.real() <= 1.0)
        throw OutsideConvergenceStrip("t_split: the direct heat integral needs Re(s) > 1");
    double phimass = cutoff_mass(phi);
    quad::QuadOptions opt{1e-11, 1e-11, 8000};

    // T1: lower piece by quadrature, upper tail as incomplete-gamma sums.
    Complex heat_lower = quad::integrate(
        [&](double x) {
            return 2.0 * std::pow(Complex(x), 2.0 * (s - 0.5) - 1.0) * spec.heat_trace_y(x * x);
        },
        0.0, 1.0, opt);
    Complex t1 = phimass / (2.0 * kSqrtPi) * (heat_lower + heat_mellin_tail_gamma(spec, s));

    // T2: the inner integral lives on the cutoff ramp; below machine
    // precision once a^2/t > 40.
    auto t2_inner = [&](double t) {
        if (phi.kind == CutoffFunction::Kind::Indicator) return 0.0;
        if (phi.a * phi.a / t > 40.0) return 0.0;
        return quad::integrate(
            [&](double u) {
                return phi.derivative(u) * cylinder_detail::erfc_mode_sum(spec, t, u, false);
            },
            phi.a, phi.b, {1e-13, 1e-11, 2000});
    };
    Complex t2 = 0.5 * mellin(s, t2_inner);

    Complex t3 = specfun::gamma(s + 0.5) / (4.0 * s * kSqrtPi) * spec.zeta_b2(s) -
                 1.0 / (2.0 * kSqrtPi) *
                     mellin(s - 0.5, [&](double t) {
                         return spec.heat_trace_y(t) * cutoff_window(phi, t);
                     });
    return {t1, t2, t3};
}

Complex s_function(const TangentialSpectrum& spec, Complex s) {
    return specfun::gamma_limit_f(s) * spec.zeta_b2(s);
}

Complex g_r(const TangentialSpectrum& spec, Complex s, const CutoffFunction& phi) {
    return 1.0 / (2.0 * kSqrtPi) *
           mellin(s, [&](double t) {
               return spec.heat_trace_y(t) * complement_window(phi, t) / std::sqrt(t);
           });
}

Complex rho_derivative_term(const TangentialSpectrum& spec, Complex s,
                            const CutoffFunction& rho) {
    auto inner = [&](double t) {
        if (rho.kind == CutoffFunction::Kind::Indicator) return 0.0;
        if (rho.a * rho.a / t > 40.0) return 0.0;
        return quad::integrate(
            [&](double u) {
                return rho.derivative(u) * cylinder_detail::erfc_mode_sum(spec, t, u, false);
            },
            rho.a, rho.b, {1e-13, 1e-11, 2000});
    };
    return mellin(s, inner);
}

Complex gaussian_window_term(const TangentialSpectrum& spec, Complex s,
                             const CutoffFunction& rho) {
    if (s.real() <= 0.5)
        throw OutsideConvergenceStrip("gaussian_window_term: direct integral needs Re(s) > 1/2");
    return 1.0 / (2.0 * kSqrtPi) *
           mellin(s - 0.5,
                  [&](double t) { return spec.heat_trace_y(t) * cutoff_window(rho, t); });
}

TwoSidesC aps_cylinder_identity(const TangentialSpectrum& spec, Complex s,
                                const CutoffFunction& rho) {
    if (s.real() <= 1.0)
        throw OutsideConvergenceStrip("aps_cylinder_identity: direct regime needs Re(s) > 1");

    const double mass = cutoff_mass(rho);
    // Diagonal of the cut-off APS pair kernels, mode by mode: the Dirichlet
    // and Robin image terms cancel within each pair, leaving the free part
    // and the erfc correction. Below the window scale the correction's
    // u-integral collapses to spectrum sums (cutoff complement < 1e-16).
    auto lhs_inner = [&](double t) {
        double bulk = spec.heat_trace_y(t) / std::sqrt(4.0 * kPi * t) * mass;
        double window;
        if (t >= 0.003) {
            window = quad::integrate(
                [&](double u) {
                    return rho.value(u) * cylinder_detail::erfc_mode_sum(spec, t, u, true);
                },
                0.0, rho.b, {1e-13, 1e-11, 2000});
        } else {
            window = 0.5 * (spec.half_heat_trace(t) - spec.erfc_sum(std::sqrt(t)));
        }
        return bulk - window;
    };
    Complex lhs = mellin(s, lhs_inner);

    Complex t1 = mass / (2.0 * kSqrtPi) *
                 mellin(s - 0.5, [&](double t) { return spec.heat_trace_y(t); });
    Complex f2 = gaussian_window_term(spec, s, rho);
    Complex f1 = rho_derivative_term(spec, s, rho);
    Complex gam = specfun::gamma(s + 0.5) / (4.0 * s * kSqrtPi) * spec.zeta_b2(s);
    Complex rhs = t1 - f2 + gam + 0.5 * f1;
    return {lhs, rhs};
}

ZetaAtZeroParts aps_zeta_at_zero(const TangentialSpectrum& spec, const CutoffFunction& rho) {
    (void)rho;  // the cutoff-dependent terms are entire and drop out of s * (...) at 0
    double z0 = spec.zeta_b2_at_0();
    double q1 = specfun::gamma(Complex(0.5)).real() / (4.0 * kSqrtPi) * z0;
    double q2 = 0.25 * specfun::gamma(Complex(1.0)).real() * z0;
    return {q1, q2, q1 - q2};
}

}  // namespace zetacyl
