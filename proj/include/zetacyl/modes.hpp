#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zetacyl/specfun.hpp"

namespace zetacyl {

// Boundary condition at one interval endpoint. Robin tags follow the
// outward-derivative convention: RobinPlus means dy/dn = +lambda y and
// RobinMinus means dy/dn = -lambda y at that endpoint, with lambda > 0 taken
// from the enclosing problem.
enum class Bc { Dirichlet, Neumann, RobinPlus, RobinMinus };

const char* bc_name(Bc bc);
std::optional<Bc> bc_from_char(char c);
// "DD", "DN", "DR-", "R-R-", ... -> endpoint pair
std::optional<std::pair<Bc, Bc>> parse_bc_pair(const std::string& text);

// One scalar problem -d^2/du^2 + lambda^2 on an interval or circle.
struct ModeProblem {
    double lambda = 1.0;
    bool circle = false;
    double length = 1.0;  // interval length, or circumference when circle
    Bc left = Bc::Dirichlet;
    Bc right = Bc::Dirichlet;

    static ModeProblem interval(double lambda, double length, Bc left, Bc right);
    static ModeProblem circle_problem(double lambda, double circumference);
};

// The two-dimensional mode pair (phi, G phi) with a boundary condition type.
// ApsRight carries the positive spectral projection at the u = 0 cut (the
// condition natural to the right-hand piece); ApsLeft the complementary one.
enum class PairKind { ChiralPlus, ChiralMinus, ApsRight, ApsLeft };

struct PairProblem {
    double lambda = 1.0;
    PairKind kind = PairKind::ChiralPlus;
    bool circle = false;
    double length = 1.0;

    static PairProblem interval(double lambda, double length, PairKind kind);
    static PairProblem circle_pair(double lambda, double circumference);
};

// Expand a pair problem into its two scalar components. On an interval the
// second endpoint carries the orientation-reversed condition (chirality and
// spectral projection both flip with the inward normal).
std::array<ModeProblem, 2> expand_pair(const PairProblem& p);

// Characteristic function whose zeros in mu are the eigenvalues; built from
// the fundamental system {cos(w u), sin(w u)/w}, w^2 = mu - lambda^2,
// analytic across w = 0. Interval geometry only.
double char_fn(const ModeProblem& p, double mu);

// All eigenvalues <= mu_max, ascending, multiplicity by repetition.
// Bracketing on an omega grid with bisection refinement to 1e-12 relative;
// the count is checked against the Weyl estimate and the grid auto-refined
// up to 4 times before BracketingFailure.
std::vector<double> eigenvalues(const ModeProblem& p, double mu_max);

// log det_zeta from enumerated eigenvalues: fit the small-t reduced heat
// trace a t^{-1/2} + c0 (+ fitted residual powers), Mellin-continue, and
// complete the tail with exponential integrals. Absolute target 1e-5.
double zeta_det_oracle(const ModeProblem& p, int levels = 200);

// Closed-form log det_zeta for the validated boundary pairs; throws
// UnsupportedBC when the combination admits no positive-spectrum closed form.
double zeta_det_closed(const ModeProblem& p);

// Closed form when available, oracle otherwise.
double zeta_det(const ModeProblem& p);

// zeta_p(0): the constant heat coefficient, additive over endpoints
// (Dirichlet -1/4, Neumann +1/4, Robin +1/4; circle 0).
double zeta_at_zero_mode(const ModeProblem& p);

// Divergent template a lambda len + b log lambda + c of the closed forms.
struct DetTemplate {
    double a = 0.0;  // coefficient of lambda * length
    double b = 0.0;  // coefficient of log lambda
    double c = 0.0;  // constant
};
DetTemplate det_template(const ModeProblem& p);

// zeta_det_closed minus its template; decays like e^{-2 lambda length-scale}.
double lndet_residual(const ModeProblem& p);

}  // namespace zetacyl
