#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetacyl/regsum.hpp"

namespace zetacyl {

// Stretched circle model: circumference 2R+2, two pieces of length R+1, cut
// locus two copies of Y (every theorem constant below uses the doubled
// tangential spectrum of the cut).
struct ModelGeometry {
    double R;
    static constexpr double collar = 1.0;
    double circumference() const { return 2.0 * R + 2.0; }
    double piece_length() const { return R + 1.0; }
};

// log det gap of the chiral decomposition:
//   ln det(circle) - ln det(piece 1, -) - ln det(piece 2, +), limit 0.
double theorem1_gap(const TangentialSpectrum& spec, double R);

// log det gap of the spectral-projection decomposition; limit
// -2 log 2 zeta_{B^2}(0) on the doubled cut locus.
double theorem2_gap(const TangentialSpectrum& spec, double R);

// One piece, projection-vs-chiral log det difference; limit
// log 2 zeta_{B^2}(0) (doubled boundary of the piece).
double aps_vs_chiral(const TangentialSpectrum& spec, double R, int piece);

// Smallest eigenvalue over the family's mode problems; >= lambda_min^2.
double spectral_gap(const TangentialSpectrum& spec, double R, const ProblemFamily& family);

// int_{R^eps}^inf t^{-1} theta_family(t) dt on the circle family via
// per-eigenvalue exponential integrals.
double large_time_tail(const TangentialSpectrum& spec, double R, double epsilon);

// Sup over the diagonal of the glued-parametrix defect convolution for one
// mode on the circle of circumference 2R+2, by direct quadrature.
double parametrix_defect(double lambda, double R, double t);

// Glued-parametrix correction kernel itself (for support checks).
double parametrix_correction(double lambda, double R, double t, double x, double y);

// Ordinary least squares of log|gap - target| against R; returns the decay
// rate (positive for exponential convergence) and the fit's R^2.
struct DecayFit {
    double rate = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
};
DecayFit fit_decay(const std::vector<double>& r_grid, const std::vector<double>& values,
                   double target);

struct ExperimentRow {
    double R = 0.0;  // abscissa: R for sweeps, Re(s) for identity scans
    double value = 0.0;
    std::vector<std::pair<std::string, double>> components;
};

struct ExperimentReport {
    std::string experiment;
    std::string spectrum;
    std::vector<ExperimentRow> rows;
    double target = 0.0;
    double fitted_rate = 0.0;
    bool pass = false;
    double tolerance = 0.0;
    std::string note;
};

struct RunConfig;  // defined in config.hpp

ExperimentReport run_experiment(const RunConfig& config);

}  // namespace zetacyl
