#include "zetacyl/modes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetacyl/errors.hpp"
#include "zetacyl/quadrature.hpp"

namespace zetacyl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kLog2 = 0.69314718055994530942;

// Fundamental system at energy w2 = mu - lambda^2:
//   C(u) = cos(w u),  S(u) = sin(w u)/w,  with C' = -w2 S and S' = C.
// Both are entire in w2; hyperbolic branch for w2 < 0.
struct Fundamental {
    double c, s;
};

Fundamental fundamental(double w2, double u) {
    double z = w2 * u * u;
    if (std::fabs(z) < 1e-8) {
        // series in z keeps the w -> 0 crossing smooth
        double c = 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0;
        double s = u * (1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0);
        return {c, s};
    }
    if (w2 > 0.0) {
        double w = std::sqrt(w2);
        return {std::cos(w * u), std::sin(w * u) / w};
    }
    double k = std::sqrt(-w2);
    return {std::cosh(k * u), std::sinh(k * u) / k};
}

// Initial data (y(0), y'(0)) realizing the left boundary condition.
void left_data(Bc bc, double lambda, double& y0, double& yp0) {
    switch (bc) {
        case Bc::Dirichlet: y0 = 0.0; yp0 = 1.0; return;
        case Bc::Neumann: y0 = 1.0; yp0 = 0.0; return;
        case Bc::RobinPlus: y0 = 1.0; yp0 = -lambda; return;   // -y'(0) = +lambda y(0)
        case Bc::RobinMinus: y0 = 1.0; yp0 = lambda; return;   // -y'(0) = -lambda y(0)
    }
    y0 = 0.0;
    yp0 = 1.0;
}

bool has_robin(const ModeProblem& p) {
    auto r = [](Bc b) { return b == Bc::RobinPlus || b == Bc::RobinMinus; };
    return !p.circle && (r(p.left) || r(p.right));
}

// Circle eigenvalues in closed form.
std::vector<double> circle_eigenvalues(const ModeProblem& p, double mu_max) {
    std::vector<double> out;
    double l2 = p.lambda * p.lambda;
    if (l2 <= mu_max) out.push_back(l2);  // k = 0 constant mode
    for (int k = 1;; ++k) {
        double mu = l2 + std::pow(2.0 * kPi * k / p.length, 2);
        if (mu > mu_max) break;
        out.push_back(mu);
        out.push_back(mu);  // multiplicity 2
    }
    return out;
}

// Least squares fit of g(x) = sum_j coef[j] x^j on given samples, solved by
// normal equations with scaling (degree <= 8, narrow windows: fine).
std::vector<double> polyfit(const std::vector<double>& xs, const std::vector<double>& ys,
                            int degree) {
    int m = degree + 1;
    double scale = xs.back();
    std::vector<double> ata(size_t(m * m), 0.0), atb(size_t(m), 0.0);
    for (size_t i = 0; i < xs.size(); ++i) {
        double xp = 1.0;
        std::vector<double> row(size_t(m), 0.0);
        double xn = xs[i] / scale;
        for (int j = 0; j < m; ++j) {
            row[size_t(j)] = xp;
            xp *= xn;
        }
        for (int r = 0; r < m; ++r) {
            atb[size_t(r)] += row[size_t(r)] * ys[i];
            for (int c = 0; c < m; ++c) ata[size_t(r * m + c)] += row[size_t(r)] * row[size_t(c)];
        }
    }
    // Gaussian elimination with partial pivoting
    std::vector<double> a = ata, b = atb;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[size_t(r * m + col)]) > std::fabs(a[size_t(piv * m + col)])) piv = r;
        for (int c = 0; c < m; ++c) std::swap(a[size_t(col * m + c)], a[size_t(piv * m + c)]);
        std::swap(b[size_t(col)], b[size_t(piv)]);
        double d = a[size_t(col * m + col)];
        for (int r = col + 1; r < m; ++r) {
            double f = a[size_t(r * m + col)] / d;
            for (int c = col; c < m; ++c) a[size_t(r * m + c)] -= f * a[size_t(col * m + c)];
            b[size_t(r)] -= f * b[size_t(col)];
        }
    }
    std::vector<double> coef(size_t(m), 0.0);
    for (int r = m - 1; r >= 0; --r) {
        double acc = b[size_t(r)];
        for (int c = r + 1; c < m; ++c) acc -= a[size_t(r * m + c)] * coef[size_t(c)];
        coef[size_t(r)] = acc / a[size_t(r * m + r)];
    }
    // undo scaling
    double sp = 1.0;
    for (int j = 0; j < m; ++j) {
        coef[size_t(j)] /= sp;
        sp *= scale;
    }
    return coef;
}

}  // namespace

const char* bc_name(Bc bc) {
    switch (bc) {
        case Bc::Dirichlet: return "D";
        case Bc::Neumann: return "N";
        case Bc::RobinPlus: return "R+";
        case Bc::RobinMinus: return "R-";
    }
    return "?";
}

std::optional<Bc> bc_from_char(char c) {
    switch (c) {
        case 'D': case 'd': return Bc::Dirichlet;
        case 'N': case 'n': return Bc::Neumann;
        case '+': return Bc::RobinPlus;
        case '-': return Bc::RobinMinus;
        default: return std::nullopt;
    }
}

std::optional<std::pair<Bc, Bc>> parse_bc_pair(const std::string& text) {
    std::vector<Bc> tags;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'D' || c == 'd') {
            tags.push_back(Bc::Dirichlet);
        } else if (c == 'N' || c == 'n') {
            tags.push_back(Bc::Neumann);
        } else if (c == 'R' || c == 'r') {
            if (i + 1 >= text.size()) return std::nullopt;
            char sign = text[++i];
            if (sign == '+') tags.push_back(Bc::RobinPlus);
            else if (sign == '-') tags.push_back(Bc::RobinMinus);
            else return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (tags.size() != 2) return std::nullopt;
    return std::make_pair(tags[0], tags[1]);
}

ModeProblem ModeProblem::interval(double lambda, double length, Bc left, Bc right) {
    if (!(lambda > 0.0)) throw NonPositiveEigenvalue("mode problem: lambda must be positive");
    if (!(length > 0.0)) throw std::invalid_argument("mode problem: length must be positive");
    ModeProblem p;
    p.lambda = lambda;
    p.circle = false;
    p.length = length;
    p.left = left;
    p.right = right;
    return p;
}

ModeProblem ModeProblem::circle_problem(double lambda, double circumference) {
    if (!(lambda > 0.0)) throw NonPositiveEigenvalue("mode problem: lambda must be positive");
    if (!(circumference > 0.0)) throw std::invalid_argument("circumference must be positive");
    ModeProblem p;
    p.lambda = lambda;
    p.circle = true;
    p.length = circumference;
    return p;
}

PairProblem PairProblem::interval(double lambda, double length, PairKind kind) {
    if (!(lambda > 0.0)) throw NonPositiveEigenvalue("pair problem: lambda must be positive");
    PairProblem p;
    p.lambda = lambda;
    p.kind = kind;
    p.circle = false;
    p.length = length;
    return p;
}

PairProblem PairProblem::circle_pair(double lambda, double circumference) {
    if (!(lambda > 0.0)) throw NonPositiveEigenvalue("pair problem: lambda must be positive");
    PairProblem p;
    p.lambda = lambda;
    p.circle = true;
    p.length = circumference;
    return p;
}

std::array<ModeProblem, 2> expand_pair(const PairProblem& p) {
    if (p.circle) {
        auto c = ModeProblem::circle_problem(p.lambda, p.length);
        return {c, c};
    }
    switch (p.kind) {
        case PairKind::ChiralPlus:
            // Dirichlet on one chirality at the cut, Neumann on the other;
            // the chirality flips with the inward normal at the far end.
            return {ModeProblem::interval(p.lambda, p.length, Bc::Dirichlet, Bc::Neumann),
                    ModeProblem::interval(p.lambda, p.length, Bc::Neumann, Bc::Dirichlet)};
        case PairKind::ChiralMinus:
            return {ModeProblem::interval(p.lambda, p.length, Bc::Neumann, Bc::Dirichlet),
                    ModeProblem::interval(p.lambda, p.length, Bc::Dirichlet, Bc::Neumann)};
        case PairKind::ApsRight:
            // phi-component: Dirichlet at the cut; the projected derivative
            // condition lands on the G phi-component as an outward Robin-minus.
            // Orientation reversal gives the mirrored tags at the far end.
            return {ModeProblem::interval(p.lambda, p.length, Bc::Dirichlet, Bc::RobinMinus),
                    ModeProblem::interval(p.lambda, p.length, Bc::RobinMinus, Bc::Dirichlet)};
        case PairKind::ApsLeft:
            return {ModeProblem::interval(p.lambda, p.length, Bc::RobinMinus, Bc::Dirichlet),
                    ModeProblem::interval(p.lambda, p.length, Bc::Dirichlet, Bc::RobinMinus)};
    }
    throw std::logic_error("expand_pair: unreachable");
}

double char_fn(const ModeProblem& p, double mu) {
    if (p.circle) throw std::invalid_argument("char_fn: interval geometry only");
    double w2 = mu - p.lambda * p.lambda;
    double y0, yp0;
    left_data(p.left, p.lambda, y0, yp0);
    Fundamental f = fundamental(w2, p.length);
    double yl = y0 * f.c + yp0 * f.s;
    double ypl = -w2 * y0 * f.s + yp0 * f.c;
    switch (p.right) {
        case Bc::Dirichlet: return yl;
        case Bc::Neumann: return ypl;
        case Bc::RobinPlus: return ypl - p.lambda * yl;   // y'(l) = +lambda y(l)
        case Bc::RobinMinus: return ypl + p.lambda * yl;  // y'(l) = -lambda y(l)
    }
    return yl;
}

std::vector<double> eigenvalues(const ModeProblem& p, double mu_max) {
    double l2 = p.lambda * p.lambda;
    if (!(mu_max > l2)) throw std::invalid_argument("eigenvalues: mu_max must exceed lambda^2");
    if (p.circle) return circle_eigenvalues(p, mu_max);

    const double l = p.length;
    const double omega_max = std::sqrt(mu_max - l2);

    auto bisect = [&](double mu_lo, double mu_hi) {
        double flo = char_fn(p, mu_lo);
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (mu_lo + mu_hi);
            if (mid <= mu_lo || mid >= mu_hi) break;
            double fm = char_fn(p, mid);
            if (fm == 0.0) return mid;
            if ((flo < 0.0) != (fm < 0.0)) {
                mu_hi = mid;
            } else {
                mu_lo = mid;
                flo = fm;
            }
            if (mu_hi - mu_lo < 1e-13 * std::max(1.0, mu_hi)) break;
        }
        return 0.5 * (mu_lo + mu_hi);
    };

    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<double> mus;

        // Hyperbolic branch mu in (0, lambda^2): only Robin-plus ends can
        // push an eigenvalue below lambda^2. Uniform kappa grid plus geometric
        // refinement toward kappa = lambda for the near-zero-mode roots.
        if (has_robin(p)) {
            // mu grid below lambda^2 built from gap fractions g = 1 - kappa/lambda,
            // mu = lambda^2 g (2 - g); geometric part resolves near-zero modes.
            std::vector<double> mu_grid;
            for (int j = 120; j >= 1; --j) {
                double g = std::pow(0.5, double(j) * 0.5);
                double mu = l2 * g * (2.0 - g);
                if (mu > 1e-300) mu_grid.push_back(mu);
            }
            int base = 64 << attempt;
            for (int i = 1; i < base; ++i) {
                double g = double(i) / double(base);
                mu_grid.push_back(l2 * g * (2.0 - g));
            }
            mu_grid.push_back(l2 * (1.0 - 1e-12));
            std::sort(mu_grid.begin(), mu_grid.end());
            mu_grid.erase(std::unique(mu_grid.begin(), mu_grid.end()), mu_grid.end());
            double prev_mu = mu_grid.front();
            double prev_f = char_fn(p, prev_mu);
            for (size_t i = 1; i < mu_grid.size(); ++i) {
                double mu = mu_grid[i];
                double f = char_fn(p, mu);
                if (f == 0.0)
                    mus.push_back(mu);
                else if ((prev_f < 0.0) != (f < 0.0))
                    mus.push_back(bisect(prev_mu, mu));
                prev_mu = mu;
                prev_f = f;
            }
        }

        // Oscillatory branch: omega grid with ~10 points per pi/l spacing.
        int per_period = 10 << attempt;
        int n_grid = std::max(32, int(std::ceil(omega_max * l / kPi)) * per_period);
        double prev_omega = 0.0;
        double prev_f = char_fn(p, l2);
        for (int i = 1; i <= n_grid; ++i) {
            double omega = omega_max * i / double(n_grid);
            double mu = l2 + omega * omega;
            double f = char_fn(p, mu);
            if (f == 0.0) {
                mus.push_back(mu);
            } else if ((prev_f < 0.0) != (f < 0.0)) {
                mus.push_back(bisect(l2 + prev_omega * prev_omega, mu));
            }
            prev_omega = omega;
            prev_f = f;
        }

        std::sort(mus.begin(), mus.end());
        // Weyl count check: l omega_max / pi within 1 + BC offset slack
        double weyl = l * omega_max / kPi;
        if (std::fabs(double(mus.size()) - weyl) <= 2.0) return mus;
    }
    throw BracketingFailure("eigenvalues: count still off the Weyl estimate after refinements");
}

double zeta_det_oracle(const ModeProblem& p, int levels) {
    const double lambda = p.lambda;
    const double l2 = lambda * lambda;
    const double len = p.length;  // interval length or circumference
    // deepen the enumeration with lambda len so the fit window stays small
    // against the Robin boundary scale 1/lambda
    levels = std::max(levels, int(std::ceil(96.0 * lambda * len)));
    const double mu_max = l2 + std::pow(double(levels) * kPi / len, 2);

    std::vector<double> mus = eigenvalues(p, mu_max);
    if (!mus.empty() && mus.front() <= 0.0)
        throw UnsupportedBC("zeta_det_oracle: nonpositive spectrum, log-determinant undefined");

    const double omega_max = std::sqrt(mu_max - l2);
    const double t_c = 36.0 / (omega_max * omega_max);
    const double x_c = std::sqrt(t_c);

    // reduced trace with Weyl completion beyond mu_max
    auto theta_reduced = [&](double t) {
        KahanSum acc;
        for (double mu : mus) acc.add(std::exp(-(mu - l2) * t));
        acc.add(len / (2.0 * kSqrtPi) * specfun::erfc(omega_max * std::sqrt(t)) / std::sqrt(t));
        return acc.value();
    };

    // fit sqrt(t) theta on x = sqrt(t) in [x_c, 6 x_c]
    const int n_fit = 48, degree = 6;
    std::vector<double> xs(n_fit), ys(n_fit);
    for (int i = 0; i < n_fit; ++i) {
        double x = x_c * std::pow(6.0, double(i) / double(n_fit - 1));
        xs[size_t(i)] = x;
        ys[size_t(i)] = theta_reduced(x * x) * x;
    }
    std::vector<double> coef = polyfit(xs, ys, degree);
    const double a_fit = coef[0];
    const double c0_fit = coef[1];

    // small-t residual: r(t) = sum_{j>=2} coef_j x^{j-1} with x = sqrt(t), so
    // int_0^{t_c} t^{-1} e^{-lambda^2 t} r dt = 2 int_0^{x_c} e^{-lambda^2 x^2}
    // sum coef_j x^{j-2} dx
    double ismall = 2.0 * quad::integrate(
                              [&](double x) {
                                  double e = std::exp(-l2 * x * x);
                                  double poly = 0.0, xp = 1.0;
                                  for (int j = 2; j <= degree; ++j) {
                                      poly += coef[size_t(j)] * xp;
                                      xp *= x;
                                  }
                                  return e * poly;
                              },
                              0.0, x_c, {1e-13, 1e-13, 2000});

    // large-t piece: exact exponential integrals term by term
    KahanSum ilarge;
    for (double mu : mus) {
        double arg = mu * t_c;
        if (arg > 500.0) break;  // E1 below 1e-200, mus ascending
        ilarge.add(specfun::expint_e1(arg));
    }
    ilarge.add(-a_fit * lambda * specfun::incomplete_gamma_upper(Complex(-0.5), l2 * t_c).real());
    ilarge.add(-c0_fit * specfun::expint_e1(l2 * t_c));

    return 2.0 * kSqrtPi * a_fit * lambda + 2.0 * c0_fit * std::log(lambda) - ismall -
           ilarge.value();
}

double zeta_det_closed(const ModeProblem& p) {
    const double x = p.lambda * p.length;  // lambda l, or lambda L for circles
    const double loglam = std::log(p.lambda);
    if (p.circle) return x + 2.0 * std::log1p(-std::exp(-x));
    Bc a = p.left, b = p.right;
    if (b < a) std::swap(a, b);  // closed forms are reflection symmetric
    auto is = [&](Bc u, Bc v) { return a == std::min(u, v) && b == std::max(u, v); };
    if (is(Bc::Dirichlet, Bc::Dirichlet)) return x + std::log1p(-std::exp(-2.0 * x)) - loglam;
    if (is(Bc::Neumann, Bc::Neumann)) return x + std::log1p(-std::exp(-2.0 * x)) + loglam;
    if (is(Bc::Dirichlet, Bc::Neumann)) return x + std::log1p(std::exp(-2.0 * x));
    if (is(Bc::Dirichlet, Bc::RobinMinus)) return x + kLog2;
    if (is(Bc::Dirichlet, Bc::RobinPlus)) return -x + kLog2;
    if (is(Bc::Neumann, Bc::RobinMinus)) return x + kLog2 + loglam;
    if (is(Bc::RobinMinus, Bc::RobinMinus)) return x + 2.0 * kLog2 + loglam;
    throw UnsupportedBC(std::string("no validated closed form for ") + bc_name(p.left) + "-" +
                        bc_name(p.right) +
                        " (spectrum not strictly positive for this combination)");
}

double zeta_det(const ModeProblem& p) {
    try {
        return zeta_det_closed(p);
    } catch (const UnsupportedBC&) {
        return zeta_det_oracle(p);
    }
}

double zeta_at_zero_mode(const ModeProblem& p) {
    if (p.circle) return 0.0;
    auto end_constant = [](Bc bc) {
        switch (bc) {
            case Bc::Dirichlet: return -0.25;
            case Bc::Neumann: return 0.25;
            case Bc::RobinPlus: return 0.25;   // oracle-pinned, cached
            case Bc::RobinMinus: return 0.25;  // oracle-pinned, cached
        }
        return 0.0;
    };
    return end_constant(p.left) + end_constant(p.right);
}

DetTemplate det_template(const ModeProblem& p) {
    if (p.circle) return {1.0, 0.0, 0.0};
    Bc a = p.left, b = p.right;
    if (b < a) std::swap(a, b);
    auto is = [&](Bc u, Bc v) { return a == std::min(u, v) && b == std::max(u, v); };
    if (is(Bc::Dirichlet, Bc::Dirichlet)) return {1.0, -1.0, 0.0};
    if (is(Bc::Neumann, Bc::Neumann)) return {1.0, 1.0, 0.0};
    if (is(Bc::Dirichlet, Bc::Neumann)) return {1.0, 0.0, 0.0};
    if (is(Bc::Dirichlet, Bc::RobinMinus)) return {1.0, 0.0, kLog2};
    if (is(Bc::Dirichlet, Bc::RobinPlus)) return {-1.0, 0.0, kLog2};
    if (is(Bc::Neumann, Bc::RobinMinus)) return {1.0, 1.0, kLog2};
    if (is(Bc::RobinMinus, Bc::RobinMinus)) return {1.0, 1.0, 2.0 * kLog2};
    throw UnsupportedBC("no template for this boundary pair");
}

double lndet_residual(const ModeProblem& p) {
    DetTemplate t = det_template(p);
    return zeta_det_closed(p) - (t.a * p.lambda * p.length + t.b * std::log(p.lambda) + t.c);
}

}  // namespace zetacyl
