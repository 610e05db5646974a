#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace regge {

template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

/// Determinant via partial-pivot LU.
double det3(const Mat<3>& m);
double det4(const Mat<4>& m);
double det5(const Mat<5>& m);

/// Cofactor matrix (signed minors), same layout as the input.
Mat<4> cofactor4(const Mat<4>& m);
Mat<5> cofactor5(const Mat<5>& m);

/// Leading principal minors d1..dN (dN = det).
std::array<double, 4> leading_minors4(const Mat<4>& m);

/// Clamp to [-1, 1] before acos/asin.
double clamp_unit(double x);

/// Square root with a tolerance for slightly negative arguments; arguments
/// below -tol raise DomainError.
double sqrt_clamped(double x, double tol);

/// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign; bisection to
/// relative width rtol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rtol, int max_iter = 200);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

/// Adaptive composite 15-point Gauss-Legendre with step-doubling error
/// control: a panel is accepted when the two-half refinement moves the
/// result by less than its share of abs_tol. Throws QuadratureFailure when
/// the panel budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_panels);

/// Richardson-extrapolated central difference (steps h and h/2).
double derivative(const std::function<double(double)>& f, double x, double h);

} // namespace regge
