#pragma once

#include <utility>

#include "regge/geometry.hpp"

namespace regge {

/// Side lengths of a triangle. Spherical sides are arc lengths below pi with
/// perimeter below 2*pi; hyperbolic sides are lengths at curvature -1.
struct TriangleSides {
    double a = 0, b = 0, c = 0;
    double operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

/// Interior angles opposite the corresponding sides, each in (0, pi).
struct TriangleAngles {
    double alpha = 0, beta = 0, gamma = 0;
    double operator[](int i) const { return i == 0 ? alpha : (i == 1 ? beta : gamma); }
};

/// Semiperimeter and semi-angle-sum.
struct SemiQuantities {
    double s = 0;
    double sigma = 0;
};

// Relative margin below which a triangle counts as degenerate.
inline constexpr double kTriangleDegeneracyTol = 1e-12;

/// Throws DegenerateTriangle / DomainError when the sides are not strictly
/// admissible for the geometry.
void check_sides(Geometry g, const TriangleSides& t);
/// Same for an angle triple (angle sum criterion per geometry).
void check_angles(Geometry g, const TriangleAngles& t);

SemiQuantities semi_quantities(const TriangleSides& t, const TriangleAngles& u);

/// Angles from sides via the half-angle formulas.
TriangleAngles solve_angles_from_sides(Geometry g, const TriangleSides& t);

/// Sides from angles via the half-side formulas (curved geometries only).
TriangleSides solve_sides_from_angles(Geometry g, const TriangleAngles& t);

/// Cosine-law closure of two sides and the included angle.
std::pair<TriangleSides, TriangleAngles> solve_sas(Geometry g, double a, double b,
                                                   double gamma);

/// Angle at the junction of sides adj1 and adj2, opposite side opp.
double triangle_angle(Geometry g, double adj1, double adj2, double opp);

/// tan(angle/2) at the given vertex (0 -> alpha opposite a, etc).
double half_angle_tangent(Geometry g, const TriangleSides& t, int vertex);

/// tan(a/2) (spherical) or tanh(a/2) (hyperbolic) of the unique triangle
/// with the given angles.
double half_side_tangent(Geometry g, const TriangleAngles& t, int side);

// The four bijections behind the product/quotient description of conics:
// with c fixed, a+b <-> tan(alpha/2)*tan(beta/2) and a-b <-> the ratio;
// with gamma fixed (curved geometries), alpha+beta <-> the product of
// half-side tangents and alpha-beta <-> their ratio.

double side_sum_product(Geometry g, double c, double a_plus_b);
double side_sum_from_product(Geometry g, double c, double product);

double side_diff_ratio(Geometry g, double c, double a_minus_b);
double side_diff_from_ratio(Geometry g, double c, double ratio);

double side_product_from_angle_sum(Geometry g, double gamma, double angle_sum);
double angle_sum_from_side_product(Geometry g, double gamma, double side_product);

double side_ratio_from_angle_diff(Geometry g, double gamma, double angle_diff);
double angle_diff_from_side_ratio(Geometry g, double gamma, double side_ratio);

} // namespace regge
