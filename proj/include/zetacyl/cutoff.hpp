#pragma once

#include <cmath>

namespace zetacyl {

// Quintic smoothstep: 0 at x <= 0, 1 at x >= 1, C^2 across both ends.
double smoothstep_quintic(double x);
double smoothstep_quintic_d1(double x);
double smoothstep_quintic_d2(double x);

// Plateau cutoff: value 1 on [0, a], 0 on [b, infinity), monotone between.
// The quintic profile keeps one continuous derivative bound c/(b-a); the
// indicator variant has a numerically vanishing derivative (steep limit).
struct CutoffFunction {
    enum class Kind { SmoothStepQuintic, Indicator };
    Kind kind = Kind::SmoothStepQuintic;
    double a = 1.0;
    double b = 2.0;

    static CutoffFunction quintic(double a, double b);
    static CutoffFunction indicator(double edge);

    double value(double u) const;
    double derivative(double u) const;
    double second_derivative(double u) const;
    // max |derivative|; equals 1.875/(b-a) for the quintic profile
    double derivative_bound() const;
};

}  // namespace zetacyl
