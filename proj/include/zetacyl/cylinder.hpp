#pragma once

#include <utility>

#include "zetacyl/cutoff.hpp"
#include "zetacyl/spectrum.hpp"

namespace zetacyl {

// Image-charge structure of the half-line heat kernels for one mode.
enum class ScalarKernelKind { FreeLine, DirichletHalfLine, NeumannHalfLine, APSRobinHalfLine };

// Boundary condition for a full mode pair at the cut.
enum class PairBc { ChiralPlus, ChiralMinus, APS };

// Heat kernel of -d^2/du^2 + lambda^2 at time t between u and v:
//   FreeLine          e^{-l^2 t} (4 pi t)^{-1/2} e^{-(u-v)^2/4t}
//   Dirichlet         free minus the (u+v) image
//   Neumann           free plus the (u+v) image
//   APSRobinHalfLine  Neumann minus lambda e^{lambda(u+v)} erfc((u+v)/(2 sqrt t) + lambda sqrt t),
// the last satisfying (d/du - lambda) K = 0 at u = 0.
double scalar_kernel(ScalarKernelKind kind, double lambda, double t, double u, double v);

// Scalar kernels carried by the (phi, G phi) components of a mode pair.
std::pair<ScalarKernelKind, ScalarKernelKind> mode_pair_kernels(PairBc bc, double lambda);

// Both sides of the boundary-contribution identity: the four image-term
// integrals over [0, R] summed over modes against (4 pi t)^{-1/2} 2R Tr_Y.
struct TwoSides {
    double lhs;
    double rhs;
};
TwoSides chiral_boundary_identity(const TangentialSpectrum& spec, double t, double R);

struct TSplit {
    Complex t1, t2, t3;
};

// The three-term split of the cutoff cylinder trace transform:
//   T1 = (4 pi)^{-1/2} (int phi) int t^{s-3/2} Tr_Y dt          [Re s > 1]
//   T2 = (1/2) int t^{s-1} int phi' sum_n e^{2 u lambda} erfc(u/sqrt t + lambda sqrt t)   [entire]
//   T3 = Gamma(s+1/2)/(4 s sqrt pi) zeta_{B^2}(s) - (2 sqrt pi)^{-1} int t^{s-3/2} Tr_Y (int phi e^{-u^2/t}) dt   [Re s > 1/2]
TSplit t_split(const TangentialSpectrum& spec, Complex s, const CutoffFunction& phi);

// S(s) = F(s) zeta_{B^2}(s) with the singularity-free Gamma-ratio evaluator.
Complex s_function(const TangentialSpectrum& spec, Complex s);

// g_R(s) = (2 sqrt pi)^{-1} int t^{s-1} Tr_Y (int (1-phi) e^{-u^2/t} du / sqrt t) dt;
// T3 = S + g_R, and g_R -> 0 as the cutoff radius grows.
Complex g_r(const TangentialSpectrum& spec, Complex s, const CutoffFunction& phi);

// Cutoff-derivative term of the APS cylinder transform (entire in s).
Complex rho_derivative_term(const TangentialSpectrum& spec, Complex s, const CutoffFunction& rho);

// Gaussian-window term int t^{s-3/2} Tr_Y (2 sqrt pi)^{-1} (int rho e^{-u^2/t} du) dt.
Complex gaussian_window_term(const TangentialSpectrum& spec, Complex s, const CutoffFunction& rho);

// Both sides of the APS cylinder-contribution identity at Re(s) > 1: the
// direct diagonal integral of the cut-off APS pair kernels against its
// four-term right side.
struct TwoSidesC {
    Complex lhs;
    Complex rhs;
};
TwoSidesC aps_cylinder_identity(const TangentialSpectrum& spec, Complex s,
                                const CutoffFunction& rho);

// The s -> 0 limit of s times the cylinder transform: two independently
// computed quarter-terms whose difference is the zeta value at 0 (zero for an
// invertible tangential operator). Returns q1 - q2 and reports both.
struct ZetaAtZeroParts {
    double quarter_gamma;     // from the Gamma(s+1/2)/(4 s sqrt pi) zeta term
    double quarter_gaussian;  // from the Gaussian-window term
    double value;             // their difference
};
ZetaAtZeroParts aps_zeta_at_zero(const TangentialSpectrum& spec, const CutoffFunction& rho);

namespace cylinder_detail {
// sum_n m_n e^{2 u lambda_n} erfc(u/sqrt(t) + lambda_n sqrt(t)), truncated on
// the e^{-u^2/t - lambda^2 t} bound; optional lambda_n weight.
double erfc_mode_sum(const TangentialSpectrum& spec, double t, double u, bool weight_lambda);
}  // namespace cylinder_detail

}  // namespace zetacyl
