#include "zetacyl/regsum.hpp"

#include <cmath>

#include "zetacyl/errors.hpp"
#include "zetacyl/quadrature.hpp"

namespace zetacyl {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kEulerGamma = 0.57721566490153286061;

bool family_has_robin(ProblemFamily::Kind k) {
    return k == ProblemFamily::Kind::ApsPieces || k == ProblemFamily::Kind::ApsPiece;
}

// Mellin integral of a both-ends-decaying integrand (e^{-at - c/t} profile).
Complex image_mellin(Complex s, double lam2, double c) {
    quad::QuadOptions opt{1e-13, 1e-12, 4000};
    auto f = [&](double t) { return std::exp(-lam2 * t - c / t); };
    Complex small = quad::integrate(
        [&](double x) { return 2.0 * std::pow(Complex(x), 2.0 * s - 1.0) * f(x * x); }, 0.0, 1.0,
        opt);
    Complex large = quad::integrate(
        [&](double x) { return std::pow(Complex(x), -s - 1.0) * f(1.0 / x); }, 0.0, 1.0, opt);
    return small + large;
}

// Finite-size remainder of one scalar problem's zeta at general s (image sums
// for the translation-invariant boundary pairs).
Complex problem_remainder(const ModeProblem& p, Complex s) {
    double lam = p.lambda;
    double lam2 = lam * lam;
    Complex acc = 0.0;
    if (p.circle) {
        double L = p.length;
        for (int j = 1; j <= 200; ++j) {
            if (j * lam * L > 42.0) break;
            acc += 2.0 * L / (2.0 * kSqrtPi) * image_mellin(s - 0.5, lam2, j * j * L * L / 4.0);
        }
        return acc / specfun::gamma(s);
    }
    double l = p.length;
    auto both = [&](Bc x) { return p.left == x && p.right == x; };
    bool dd = both(Bc::Dirichlet), nn = both(Bc::Neumann);
    bool dn = (p.left == Bc::Dirichlet && p.right == Bc::Neumann) ||
              (p.left == Bc::Neumann && p.right == Bc::Dirichlet);
    if (dd || nn || dn) {
        for (int j = 1; j <= 200; ++j) {
            if (2.0 * j * lam * l > 42.0) break;
            double sign = dn ? ((j % 2 == 0) ? 1.0 : -1.0) : 1.0;
            acc += sign * 2.0 * l / (2.0 * kSqrtPi) * image_mellin(s - 0.5, lam2, j * j * l * l);
        }
        return acc / specfun::gamma(s);
    }
    // Robin-containing problems: eigenvalue route, Re(s) > 0.6 only.
    if (s.real() <= 0.6)
        throw ContinuationUnavailable(
            "aggregate_zeta: Robin remainders are only available for Re(s) > 0.6");
    double mu_max = lam2 + std::pow(300.0 * 3.14159265358979323846 / l, 2);
    std::vector<double> mus = eigenvalues(p, mu_max);
    double omega_max = std::sqrt(mu_max - lam2);
    auto theta = [mus, l, lam2, omega_max](double t) {
        KahanSum k;
        for (double mu : mus) k.add(std::exp(-mu * t));
        k.add(l / (2.0 * kSqrtPi) * specfun::erfc(omega_max * std::sqrt(t)) / std::sqrt(t) *
              std::exp(-lam2 * t));
        return k.value();
    };
    RegularizedZeta rz(theta, {{-0.5, l / (2.0 * kSqrtPi)}, {0.0, zeta_at_zero_mode(p)}});
    Complex model = l / (2.0 * kSqrtPi) * specfun::gamma(s - 0.5) / specfun::gamma(s) *
                    std::pow(Complex(lam), 1.0 - 2.0 * s);
    // boundary classes: constants for D/N ends, the erfc transform for Robin
    Complex kappa = 0.0;
    for (Bc bc : {p.left, p.right}) {
        switch (bc) {
            case Bc::Dirichlet: kappa += -0.25; break;
            case Bc::Neumann: kappa += 0.25; break;
            case Bc::RobinMinus:
                kappa += -0.25 + specfun::gamma(s + 0.5) /
                                     (2.0 * kSqrtPi * specfun::gamma(s + 1.0));
                break;
            case Bc::RobinPlus:
                throw ContinuationUnavailable("aggregate_zeta: Robin-plus ends unsupported");
        }
    }
    model += kappa * std::pow(Complex(lam), -2.0 * s);
    return rz.value_at(s) - model;
}

struct FamilyModel {
    double bulk_coef = 0.0;   // sum of lengths: coefficient of the t^{-1/2} class
    int d_ends = 0, n_ends = 0, rminus_ends = 0;
};

FamilyModel family_model(const ProblemFamily& fam) {
    FamilyModel m;
    for (const auto& p : fam.problems_for(1.0)) {
        m.bulk_coef += p.length;
        if (p.circle) continue;
        for (Bc bc : {p.left, p.right}) {
            if (bc == Bc::Dirichlet) ++m.d_ends;
            else if (bc == Bc::Neumann) ++m.n_ends;
            else if (bc == Bc::RobinMinus) ++m.rminus_ends;
            else throw ContinuationUnavailable("aggregate_zeta: Robin-plus ends unsupported");
        }
    }
    return m;
}

}  // namespace

RegularizedZeta::RegularizedZeta(std::function<double(double)> theta,
                                 std::vector<AsymptoticTerm> terms, int kernel_dimension)
    : theta_(std::move(theta)), terms_(std::move(terms)), kernel_dim_(kernel_dimension) {}

Complex RegularizedZeta::value_at(Complex s) const {
    if (std::abs(s) < 1e-12) return Complex(at_0());
    quad::QuadOptions opt{1e-12, 1e-11, 8000};
    auto reduced = [&](double t) {
        double v = theta_(t) - kernel_dim_;
        for (const auto& a : terms_) v -= a.coefficient * std::pow(t, a.exponent);
        return v;
    };
    Complex small = quad::integrate(
        [&](double x) { return 2.0 * std::pow(Complex(x), 2.0 * s - 1.0) * reduced(x * x); }, 0.0,
        1.0, opt);
    for (const auto& a : terms_) small += a.coefficient / (s + a.exponent);
    Complex large = quad::integrate(
        [&](double x) {
            return std::pow(Complex(x), -s - 1.0) * (theta_(1.0 / x) - kernel_dim_);
        },
        0.0, 1.0, opt);
    return (small + large) / specfun::gamma(s);
}

double RegularizedZeta::at_0() const {
    for (const auto& a : terms_)
        if (a.exponent == 0.0) return a.coefficient - kernel_dim_;
    return -double(kernel_dim_);
}

double RegularizedZeta::entire_at_0() const {
    quad::QuadOptions opt{1e-12, 1e-11, 8000};
    auto reduced = [&](double t) {
        double v = theta_(t) - kernel_dim_;
        for (const auto& a : terms_) v -= a.coefficient * std::pow(t, a.exponent);
        return v;
    };
    double small = quad::integrate(
        [&](double x) { return 2.0 * reduced(x * x) / x; }, 0.0, 1.0, opt);
    double large = quad::integrate(
        [&](double x) { return (theta_(1.0 / x) - kernel_dim_) / x; }, 0.0, 1.0, opt);
    return small + large;
}

double RegularizedZeta::deriv_at_0() const {
    double v = entire_at_0();
    for (const auto& a : terms_) {
        if (a.exponent == 0.0)
            v += kEulerGamma * a.coefficient;
        else
            v += a.coefficient / a.exponent;
    }
    return v;
}

std::vector<ModeProblem> ProblemFamily::problems_for(double lambda) const {
    double l = piece_length();
    double L = circumference();
    switch (kind) {
        case Kind::FullCircle: {
            auto c = ModeProblem::circle_problem(lambda, L);
            return {c, c};
        }
        case Kind::ChiralPieces: {
            auto a = ModeProblem::interval(lambda, l, Bc::Dirichlet, Bc::Neumann);
            auto b = ModeProblem::interval(lambda, l, Bc::Neumann, Bc::Dirichlet);
            return {a, b, a, b};
        }
        case Kind::ApsPieces: {
            auto a = ModeProblem::interval(lambda, l, Bc::Dirichlet, Bc::RobinMinus);
            auto b = ModeProblem::interval(lambda, l, Bc::RobinMinus, Bc::Dirichlet);
            return {a, b, a, b};
        }
        case Kind::ChiralPiece:
            return {ModeProblem::interval(lambda, l, Bc::Dirichlet, Bc::Neumann),
                    ModeProblem::interval(lambda, l, Bc::Neumann, Bc::Dirichlet)};
        case Kind::ApsPiece:
            return {ModeProblem::interval(lambda, l, Bc::Dirichlet, Bc::RobinMinus),
                    ModeProblem::interval(lambda, l, Bc::RobinMinus, Bc::Dirichlet)};
    }
    throw std::logic_error("problems_for: unreachable");
}

std::string ProblemFamily::name() const {
    switch (kind) {
        case Kind::FullCircle: return "full-circle";
        case Kind::ChiralPieces: return "chiral-pieces";
        case Kind::ApsPieces: return "aps-pieces";
        case Kind::ChiralPiece: return "chiral-piece";
        case Kind::ApsPiece: return "aps-piece";
    }
    return "?";
}

Complex aggregate_zeta(const TangentialSpectrum& spec, const ProblemFamily& family, Complex s) {
    FamilyModel model = family_model(family);

    if (std::abs(s) < 1e-12) {
        // bulk class vanishes at 0 (Gamma(s-1/2)/Gamma(s) -> 0); the boundary
        // classes contribute their s = 0 constants; remainders carry 1/Gamma(0).
        double kappa0 = -0.25 * model.d_ends + 0.25 * model.n_ends;
        kappa0 += model.rminus_ends *
                  (-0.25 + specfun::gamma(Complex(0.5)).real() /
                               (2.0 * kSqrtPi * specfun::gamma(Complex(1.0)).real()));
        return Complex(kappa0 * 0.5 * spec.zeta_b2_at_0());
    }
    if (family_has_robin(family.kind) && s.real() <= 0.6)
        throw ContinuationUnavailable(
            "aggregate_zeta: spectral-projection families are supported at Re(s) > 0.6 or s = 0");

    Complex bulk = model.bulk_coef / (2.0 * kSqrtPi) * specfun::gamma(s - 0.5) /
                   specfun::gamma(s) * 0.5 * spec.zeta_b2(s - 0.5);
    Complex kappa = Complex(-0.25 * model.d_ends + 0.25 * model.n_ends);
    if (model.rminus_ends > 0)
        kappa += double(model.rminus_ends) *
                 (-0.25 + specfun::gamma(s + 0.5) / (2.0 * kSqrtPi * specfun::gamma(s + 1.0)));
    Complex boundary = kappa * 0.5 * spec.zeta_b2(s);

    Complex rem = 0.0;
    double min_len = family.piece_length();
    bool exhausted = true;
    for (const auto& e : spec.entries()) {
        if (2.0 * e.lambda * min_len > 42.0) {
            exhausted = false;
            break;
        }
        for (const auto& p : family.problems_for(e.lambda))
            rem += double(e.multiplicity) * problem_remainder(p, s);
    }
    if (exhausted && spec.is_arithmetic())
        throw TruncationInsufficient(
            "aggregate_zeta: materialized spectrum ends before the remainder tail is negligible");
    return bulk + boundary + rem;
}

double log_det_regularized(const TangentialSpectrum& spec, const ProblemFamily& family) {
    // template coefficients of the family at unit lambda
    double a_coef = 0.0, b_coef = 0.0, c_coef = 0.0;
    for (const auto& p : family.problems_for(1.0)) {
        DetTemplate t = det_template(p);
        a_coef += t.a * p.length;
        b_coef += t.b;
        c_coef += t.c;
    }
    // residuals, ascending lambda, compensated
    KahanSum res;
    double min_len = family.piece_length();
    bool exhausted = true;
    for (const auto& e : spec.entries()) {
        if (2.0 * e.lambda * min_len > 42.0) {
            exhausted = false;
            break;
        }
        for (const auto& p : family.problems_for(e.lambda))
            res.add(e.multiplicity * lndet_residual(p));
    }
    if (exhausted && spec.is_arithmetic())
        throw TruncationInsufficient(
            "log_det_regularized: materialized spectrum ends before residuals are negligible");
    double reg_lambda_sum = 0.5 * spec.zeta_b2_at_minus_half();   // sum_reg m lambda
    double reg_log_sum = -0.25 * spec.zeta_b2_deriv_at_0();       // sum_reg m log lambda
    double reg_count = 0.5 * spec.zeta_b2_at_0();                 // sum_reg m 1
    return res.value() + a_coef * reg_lambda_sum + b_coef * reg_log_sum + c_coef * reg_count;
}

double regularized_constant_sum(const TangentialSpectrum& spec, double kappa) {
    return kappa * spec.regularized_count();
}

}  // namespace zetacyl
