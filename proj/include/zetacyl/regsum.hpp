#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetacyl/modes.hpp"
#include "zetacyl/spectrum.hpp"

namespace zetacyl {

// Mellin representation of a spectral zeta function: numeric heat trace plus
// the small-t asymptotic terms theta(t) ~ sum_i coeff_i t^{exp_i} that carry
// the analytic continuation. kernel_dimension is subtracted from the trace
// (zero throughout this artifact: everything is invertible).
class RegularizedZeta {
  public:
    struct AsymptoticTerm {
        double exponent;
        double coefficient;
    };

    RegularizedZeta(std::function<double(double)> theta, std::vector<AsymptoticTerm> terms,
                    int kernel_dimension = 0);

    // zeta(s) = (1/Gamma(s)) int_0^inf t^{s-1} (theta - dim ker) dt, continued
    // through the asymptotic terms. Valid left of the convergence abscissa
    // down to Re(s) > -min(1 + exp_i not subtracted).
    Complex value_at(Complex s) const;

    // Continued value at 0: the t^0 asymptotic coefficient minus dim ker.
    double at_0() const;

    // d/ds at s = 0, assembled from the entire part and the pole terms.
    double deriv_at_0() const;

    const std::vector<AsymptoticTerm>& asymptotic_terms() const { return terms_; }

  private:
    std::function<double(double)> theta_;
    std::vector<AsymptoticTerm> terms_;
    int kernel_dim_ = 0;
    double entire_at_0() const;
};

// Rule assigning scalar mode problems to each tangential eigenvalue on the
// stretched circle model (circumference 2R+2, pieces of length R+1).
struct ProblemFamily {
    enum class Kind {
        FullCircle,    // two periodic problems per pair
        ChiralPieces,  // both pieces, DN + ND each
        ApsPieces,     // both pieces, DR- + R-D each
        ChiralPiece,   // a single piece
        ApsPiece,      // a single piece
    };

    Kind kind = Kind::FullCircle;
    double R = 2.0;

    static ProblemFamily full_circle(double R) { return {Kind::FullCircle, R}; }
    static ProblemFamily chiral_pieces(double R) { return {Kind::ChiralPieces, R}; }
    static ProblemFamily aps_pieces(double R) { return {Kind::ApsPieces, R}; }
    static ProblemFamily chiral_piece(double R) { return {Kind::ChiralPiece, R}; }
    static ProblemFamily aps_piece(double R) { return {Kind::ApsPiece, R}; }

    double piece_length() const { return R + 1.0; }
    double circumference() const { return 2.0 * R + 2.0; }
    std::vector<ModeProblem> problems_for(double lambda) const;
    std::string name() const;
};

// zeta_total(s) = sum_n m_n sum_p zeta_p(s), with the divergent-in-n bulk and
// boundary classes resummed against zeta_{B^2} and the finite-size remainder
// summed directly. Supported at Re(s) > 1/2 away from s = 1, and at s = 0.
Complex aggregate_zeta(const TangentialSpectrum& spec, const ProblemFamily& family, Complex s);

// -zeta_total'(0): template subtraction per scalar problem (a lambda len +
// b log lambda + c) resummed with zeta_{B^2}(-1/2), zeta'_{B^2}(0),
// zeta_{B^2}(0); the exponentially small residuals summed directly in
// ascending lambda.
double log_det_regularized(const TangentialSpectrum& spec, const ProblemFamily& family);

// kappa per positive-eigenvalue mode pair, zeta-regularized:
// kappa * zeta_{B^2}(0) / 2.
double regularized_constant_sum(const TangentialSpectrum& spec, double kappa);

}  // namespace zetacyl
