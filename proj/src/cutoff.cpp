#include "zetacyl/cutoff.hpp"

#include <stdexcept>

namespace zetacyl {

double smoothstep_quintic(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

double smoothstep_quintic_d1(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    double y = x * (1.0 - x);
    return 30.0 * y * y;
}

double smoothstep_quintic_d2(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return 60.0 * x * (1.0 - x) * (1.0 - 2.0 * x);
}

CutoffFunction CutoffFunction::quintic(double a, double b) {
    if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("cutoff: need 0 <= a < b");
    return {Kind::SmoothStepQuintic, a, b};
}

CutoffFunction CutoffFunction::indicator(double edge) {
    if (!(edge > 0.0)) throw std::invalid_argument("cutoff: edge must be positive");
    return {Kind::Indicator, edge, edge * (1.0 + 1e-12)};
}

double CutoffFunction::value(double u) const {
    if (kind == Kind::Indicator) return u <= a ? 1.0 : 0.0;
    return 1.0 - smoothstep_quintic((u - a) / (b - a));
}

double CutoffFunction::derivative(double u) const {
    if (kind == Kind::Indicator) return 0.0;
    return -smoothstep_quintic_d1((u - a) / (b - a)) / (b - a);
}

double CutoffFunction::second_derivative(double u) const {
    if (kind == Kind::Indicator) return 0.0;
    return -smoothstep_quintic_d2((u - a) / (b - a)) / ((b - a) * (b - a));
}

double CutoffFunction::derivative_bound() const {
    if (kind == Kind::Indicator) return 0.0;
    return 1.875 / (b - a);
}

}  // namespace zetacyl
