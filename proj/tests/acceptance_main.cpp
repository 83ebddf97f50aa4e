// Acceptance suite: runs every quantitative claim the laboratory is built to
// verify, one line per criterion, at the pinned tolerances. Exit code is the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "zetacyl/adiabatic.hpp"
#include "zetacyl/config.hpp"
#include "zetacyl/cutoff.hpp"
#include "zetacyl/cylinder.hpp"
#include "zetacyl/modes.hpp"
#include "zetacyl/quadrature.hpp"
#include "zetacyl/report.hpp"

using namespace zetacyl;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kLog2 = 0.69314718055994530942;

int failures = 0;

void line(int id, bool pass, const std::string& what) {
    std::printf("criterion %02d %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// 1. Gamma-ratio limit: F(0) = -(log 2)/2 to 1e-10; Richardson of the naive
// two-Gamma evaluation at s = 1e-2..1e-5 agrees to 1e-6.
void criterion_1() {
    double f0 = specfun::gamma_limit_f(Complex(0.0)).real();
    double err0 = std::fabs(f0 + 0.5 * kLog2);
    auto naive = [](double s) {
        return (specfun::gamma(Complex(s + 0.5)) / (4.0 * s * kSqrtPi) -
                specfun::gamma(Complex(s)) / 4.0)
            .real();
    };
    const std::vector<double> h = {1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::vector<double>> tab(4, std::vector<double>(4, 0.0));
    for (size_t i = 0; i < 4; ++i) tab[i][0] = naive(h[i]);
    for (size_t j = 1; j < 4; ++j)
        for (size_t i = j; i < 4; ++i)
            tab[i][j] = (h[i - j] * tab[i][j - 1] - h[i] * tab[i - 1][j - 1]) / (h[i - j] - h[i]);
    double err1 = std::fabs(tab[3][3] - f0);
    line(1, err0 < 1e-10 && err1 < 1e-6,
         "gamma-ratio limit: |F(0)+log2/2| = " + num(err0) + " (tol 1e-10), Richardson |delta| = " +
             num(err1) + " (tol 1e-6)");
}

// 2. Chiral decomposition on the circle model, half-integer spectrum,
// R grid {2,4,6,8}: |gap| < 1e-4 at R = 8 and log-linear decay rate
// >= 2 lambda_min within 25 percent.
void criterion_2() {
    auto spec = TangentialSpectrum::preset("half-integer");
    std::vector<double> grid = {2.0, 4.0, 6.0, 8.0}, vals;
    for (double R : grid) vals.push_back(theorem1_gap(spec, R));
    DecayFit fit = fit_decay(grid, vals, 0.0);
    double terminal = std::fabs(vals.back());
    bool rate_ok = fit.rate >= 0.75 * 2.0 * 0.5;
    line(2, terminal < 1e-4 && rate_ok,
         "chiral gap: |gap(R=8)| = " + num(terminal) + " (tol 1e-4), rate = " + num(fit.rate) +
             " (>= 0.75 of 2 lambda_min = " + num(0.75) + ")");
}

// 3. Projection decomposition limit 2 log 2 zeta-structure on the doubled cut.
void criterion_3() {
    auto integer = TangentialSpectrum::preset("integer");
    auto half = TangentialSpectrum::preset("half-integer");
    double e_int = std::fabs(theorem2_gap(integer, 8.0) - 2.0 * kLog2);
    double e_half = std::fabs(theorem2_gap(half, 8.0));
    line(3, e_int < 1e-3 && e_half < 1e-3,
         "projection gap at R=8: integer |gap - 2log2| = " + num(e_int) +
             ", half-integer |gap| = " + num(e_half) + " (tol 1e-3)");
}

// 4. Piece bridge at every grid R to 1e-6 (orientation: the piece differences
// offset the two decompositions, theorem2 - theorem1 + sum pieces = 0), and
// the per-piece limit log 2 zeta_{B^2}(0) to 1e-3 at R = 8.
void criterion_4() {
    bool ok = true;
    double worst = 0.0;
    for (const char* name : {"integer", "half-integer"}) {
        auto spec = TangentialSpectrum::preset(name);
        for (double R : {2.0, 4.0, 6.0, 8.0}) {
            double bridge = theorem2_gap(spec, R) - theorem1_gap(spec, R) +
                            aps_vs_chiral(spec, R, 1) + aps_vs_chiral(spec, R, 2);
            worst = std::max(worst, std::fabs(bridge));
            if (std::fabs(bridge) >= 1e-6) ok = false;
        }
    }
    auto integer = TangentialSpectrum::preset("integer");
    auto half = TangentialSpectrum::preset("half-integer");
    double e_piece = std::fabs(aps_vs_chiral(integer, 8.0, 2) - kLog2 * integer.zeta_b2_at_0());
    double e_piece_h = std::fabs(aps_vs_chiral(half, 8.0, 1));
    ok = ok && e_piece < 1e-3 && e_piece_h < 1e-3;
    line(4, ok,
         "piece bridge: worst |th2-th1+sum(aps-chiral)| = " + num(worst) +
             " (tol 1e-6), piece limit errors " + num(e_piece) + ", " + num(e_piece_h) +
             " (tol 1e-3)");
}

// 5. Cylinder contribution identity at s in {1.5, 2, 3} to 1e-7 relative.
void criterion_5() {
    CutoffFunction rho = CutoffFunction::quintic(1.0 / 3.0, 2.0 / 3.0);
    bool ok = true;
    double worst = 0.0;
    for (const char* name : {"integer", "half-integer"}) {
        auto spec = TangentialSpectrum::preset(name);
        for (double sv : {1.5, 2.0, 3.0}) {
            TwoSidesC sides = aps_cylinder_identity(spec, Complex(sv), rho);
            double rel = std::abs(sides.lhs - sides.rhs) / (1.0 + std::abs(sides.lhs));
            worst = std::max(worst, rel);
            if (rel >= 1e-7) ok = false;
        }
    }
    line(5, ok, "cylinder identity: worst relative residual = " + num(worst) + " (tol 1e-7)");
}

// 6. Zeta at zero: the quarter-term difference, the projection two-piece
// aggregate, and the full circle aggregate all vanish to 1e-6.
void criterion_6() {
    CutoffFunction rho = CutoffFunction::quintic(1.0 / 3.0, 2.0 / 3.0);
    bool ok = true;
    double worst = 0.0;
    for (const char* name : {"integer", "half-integer"}) {
        auto spec = TangentialSpectrum::preset(name);
        double a = std::fabs(aps_zeta_at_zero(spec, rho).value);
        double b =
            std::fabs(aggregate_zeta(spec, ProblemFamily::aps_pieces(2.0), Complex(0.0)).real());
        double c =
            std::fabs(aggregate_zeta(spec, ProblemFamily::full_circle(2.0), Complex(0.0)).real());
        worst = std::max({worst, a, b, c});
        if (a >= 1e-6 || b >= 1e-6 || c >= 1e-6) ok = false;
    }
    line(6, ok, "zeta(0) vanishing: worst |value| = " + num(worst) + " (tol 1e-6)");
}

// 7. Decay of the cutoff-driven terms: T2 and g_R at s in {0, 2} fall between
// R = 3 and R = 6 on an exponential envelope (fitted rate > 0, R^2 > 0.95).
void criterion_7() {
    auto spec = TangentialSpectrum::preset("integer");
    std::vector<double> grid = {3.0, 4.0, 5.0, 6.0};
    bool ok = true;
    std::string detail;
    for (double sv : {0.0, 2.0}) {
        std::vector<double> t2_vals, gr_vals;
        for (double R : grid) {
            CutoffFunction phi = CutoffFunction::quintic(R, 2.0 * R);
            t2_vals.push_back(0.5 * rho_derivative_term(spec, Complex(sv), phi).real());
            gr_vals.push_back(g_r(spec, Complex(sv), phi).real());
        }
        DecayFit t2_fit = fit_decay(grid, t2_vals, 0.0);
        DecayFit gr_fit = fit_decay(grid, gr_vals, 0.0);
        bool here = t2_vals.size() == 4 && std::fabs(t2_vals[3]) < std::fabs(t2_vals[0]) &&
                    std::fabs(gr_vals[3]) < std::fabs(gr_vals[0]) && t2_fit.rate > 0.0 &&
                    gr_fit.rate > 0.0 && t2_fit.r_squared > 0.95 && gr_fit.r_squared > 0.95;
        ok = ok && here;
        detail += "s=" + num(sv) + ": T2 rate " + num(t2_fit.rate) + " R2 " +
                  num(t2_fit.r_squared) + ", g_R rate " + num(gr_fit.rate) + " R2 " +
                  num(gr_fit.r_squared) + "; ";
    }
    line(7, ok, "cutoff-term decay: " + detail + "(rates > 0, R2 > 0.95)");
}

// 8. Oracle equivalence over every supported boundary pair on the 3x3 grid.
void criterion_8() {
    Bc tags[] = {Bc::Dirichlet, Bc::Neumann, Bc::RobinPlus, Bc::RobinMinus};
    bool ok = true;
    double worst = 0.0;
    int cases = 0;
    for (Bc a : tags) {
        for (Bc b : tags) {
            for (double lam : {0.5, 1.0, 2.0}) {
                for (double l : {1.0, 2.0, 4.0}) {
                    auto p = ModeProblem::interval(lam, l, a, b);
                    double closed;
                    try {
                        closed = zeta_det_closed(p);
                    } catch (const UnsupportedBC&) {
                        continue;  // nonpositive-spectrum combinations
                    }
                    double d = std::fabs(closed - zeta_det_oracle(p));
                    worst = std::max(worst, d);
                    ++cases;
                    if (d >= 1e-4) ok = false;
                }
            }
        }
    }
    for (double lam : {0.5, 1.0, 2.0}) {
        for (double L : {2.0, 4.0, 8.0}) {
            auto p = ModeProblem::circle_problem(lam, L);
            double d = std::fabs(zeta_det_closed(p) - zeta_det_oracle(p));
            worst = std::max(worst, d);
            ++cases;
            if (d >= 1e-4) ok = false;
        }
    }
    line(8, ok && cases >= 27,
         "determinant closed vs oracle: " + std::to_string(cases) +
             " cases, worst |delta| = " + num(worst) + " (tol 1e-4)");
}

// 9. Kernel correctness: heat equation, boundary conditions, symmetry,
// short-time normalization for all four scalar kernels.
void criterion_9() {
    double lambda = 1.0, ht = 1e-4, hu = 1e-4;
    double worst_heat = 0.0;
    for (auto kind : {ScalarKernelKind::FreeLine, ScalarKernelKind::DirichletHalfLine,
                      ScalarKernelKind::NeumannHalfLine, ScalarKernelKind::APSRobinHalfLine}) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                double t = 0.2 + 0.2 * i, u = 0.5 + 0.375 * j, v = 1.2;
                auto K = [&](double tt, double uu) { return scalar_kernel(kind, lambda, tt, uu, v); };
                double dt = (K(t + ht, u) - K(t - ht, u)) / (2.0 * ht);
                double duu = (K(t, u + hu) - 2.0 * K(t, u) + K(t, u - hu)) / (hu * hu);
                worst_heat = std::max(worst_heat, std::fabs(dt - duu + lambda * lambda * K(t, u)));
            }
        }
    }
    double dir_wall = std::fabs(scalar_kernel(ScalarKernelKind::DirichletHalfLine, 1.0, 0.4, 0.0, 0.9));
    auto KN = [&](double u) { return scalar_kernel(ScalarKernelKind::NeumannHalfLine, 1.0, 0.4, u, 0.9); };
    double neu_wall = std::fabs((-3.0 * KN(0.0) + 4.0 * KN(1e-5) - KN(2e-5)) / 2e-5);
    auto KR = [&](double u) { return scalar_kernel(ScalarKernelKind::APSRobinHalfLine, 1.0, 0.3, u, 0.7); };
    double rob_wall =
        std::fabs((-3.0 * KR(0.0) + 4.0 * KR(1e-5) - KR(2e-5)) / 2e-5 - 1.0 * KR(0.0));
    double worst_sym = 0.0;
    for (auto kind : {ScalarKernelKind::FreeLine, ScalarKernelKind::DirichletHalfLine,
                      ScalarKernelKind::NeumannHalfLine, ScalarKernelKind::APSRobinHalfLine}) {
        worst_sym = std::max(worst_sym, std::fabs(scalar_kernel(kind, 1.3, 0.5, 0.4, 1.9) -
                                                  scalar_kernel(kind, 1.3, 0.5, 1.9, 0.4)));
    }
    double worst_mass = 0.0;
    for (auto kind : {ScalarKernelKind::NeumannHalfLine, ScalarKernelKind::APSRobinHalfLine}) {
        double t = 1e-4, mass = std::exp(-lambda * lambda * t);
        double integral = quad::integrate(
            [&](double v) { return scalar_kernel(kind, lambda, t, 1.0, v) / mass; }, 0.0, 2.0,
            {1e-12, 1e-10, 4000});
        worst_mass = std::max(worst_mass, std::fabs(integral - 1.0));
    }
    bool ok = worst_heat < 1e-5 && dir_wall < 1e-12 && neu_wall < 1e-7 && rob_wall < 1e-6 &&
              worst_sym < 1e-13 && worst_mass < 1e-6;
    line(9, ok,
         "kernels: heat-eq " + num(worst_heat) + " (1e-5), walls D " + num(dir_wall) + " N " +
             num(neu_wall) + " R " + num(rob_wall) + ", symmetry " + num(worst_sym) +
             " (1e-13), mass " + num(worst_mass) + " (1e-6)");
}

// 10. Parametrix defect envelope e^{-c3 R^2/t} with fitted c3 > 0 over
// R in {3,4,5}, t in {0.25, 1}; correction support vanishes below R/7.
void criterion_10() {
    std::vector<double> xs, ys;
    for (double R : {3.0, 4.0, 5.0}) {
        for (double t : {0.25, 1.0}) {
            double d = parametrix_defect(1.0, R, t);
            if (d > 0.0) {
                xs.push_back(R * R / t);
                ys.push_back(std::log(d));
            }
        }
    }
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(xs.size());
    my /= double(xs.size());
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double c3 = -sxy / sxx;
    bool support_ok = true;
    for (double x0 : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        for (double dd : {0.0, 0.1, 0.3, 0.5}) {
            if (dd < 4.0 / 7.0 && parametrix_correction(1.0, 4.0, 0.5, x0, x0 + dd) != 0.0)
                support_ok = false;
        }
    }
    line(10, c3 > 0.0 && support_ok,
         "parametrix: fitted c3 = " + num(c3) + " (> 0), support below R/7 " +
             (support_ok ? "vanishes" : "violated"));
}

// 11. Uniform spectral gap across families and R in {1,2,4,8}.
void criterion_11() {
    bool ok = true;
    double worst_margin = 1e300;
    for (const char* name : {"integer", "half-integer"}) {
        auto spec = TangentialSpectrum::preset(name);
        double bound = spec.lambda_min() * spec.lambda_min();
        for (double R : {1.0, 2.0, 4.0, 8.0}) {
            double g = std::min({spectral_gap(spec, R, ProblemFamily::full_circle(R)),
                                 spectral_gap(spec, R, ProblemFamily::chiral_pieces(R)),
                                 spectral_gap(spec, R, ProblemFamily::aps_pieces(R))});
            worst_margin = std::min(worst_margin, g - bound);
            if (g < bound - 1e-12) ok = false;
        }
    }
    line(11, ok, "spectral gap: min(mu) - lambda_min^2 >= " + num(worst_margin) + " (>= 0)");
}

// 12. Determinism: repeated runs with different thread counts produce
// byte-identical reports.
void criterion_12() {
    RunConfig cfg;
    cfg.experiment = "theorem2";
    cfg.spectrum = "integer";
    cfg.r_grid = {2.0, 4.0, 6.0, 8.0};
    cfg.tolerances["limit"] = 1e-3;
    ExperimentReport a = run_experiment(cfg);
    cfg.threads = 4;
    ExperimentReport b = run_experiment(cfg);
    std::string ja = report_to_json(a, cfg), jb = report_to_json(b, cfg);
    std::string ca = report_to_csv(a), cb = report_to_csv(b);

    RunConfig cfg2;
    cfg2.experiment = "aps-vs-chiral";
    cfg2.spectrum = "half-integer";
    cfg2.r_grid = {2.0, 3.0, 4.0};
    ExperimentReport c = run_experiment(cfg2);
    cfg2.threads = 3;
    ExperimentReport d = run_experiment(cfg2);
    bool ok = ja == jb && ca == cb &&
              report_to_json(c, cfg2) == report_to_json(d, cfg2) &&
              report_to_csv(c) == report_to_csv(d);
    line(12, ok, std::string("determinism across thread counts: ") +
                     (ok ? "byte-identical reports" : "MISMATCH"));
}

}  // namespace

int main() {
    std::printf("zetacyl acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("acceptance: %d/12 criteria passed\n", 12 - failures);
    return failures;
}
