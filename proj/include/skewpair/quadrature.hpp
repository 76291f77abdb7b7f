#ifndef SKEWPAIR_QUADRATURE_HPP
#define SKEWPAIR_QUADRATURE_HPP

#include <functional>

#include "skewpair/errors.hpp"

namespace skewpair {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Bisects the worst interval until the summed error estimate drops below
/// abs_tol; throws QuadratureError if max_intervals is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_intervals = 4000);

/// Single (G7,K15) panel over [a, b], no refinement.
QuadratureResult gk15_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace skewpair

#endif
