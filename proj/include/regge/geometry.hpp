#pragma once

#include <array>
#include <string>

#include "regge/errors.hpp"

namespace regge {

/// Curvature tag selecting the model space: Euclidean 3-space, the unit
/// 3-sphere, or hyperbolic 3-space in the hyperboloid model.
enum class Geometry : int {
    euclidean  = 0,
    spherical  = +1,
    hyperbolic = -1,
};

const char* geometry_name(Geometry g);
Geometry geometry_from_name(const std::string& name);

/// Points and tangent vectors live in R^4. Euclidean data uses components
/// 0..2 with component 3 equal to zero. Spherical points are unit vectors.
/// Hyperbolic points lie on the upper sheet <p,p> = -1 of the Minkowski
/// form that carries the minus sign on component 3. Planar constructions
/// (conics) use components 0, 1 and 3, leaving component 2 free for the
/// rotational sweep.
using Vec4 = std::array<double, 4>;

Vec4 add(const Vec4& u, const Vec4& v);
Vec4 sub(const Vec4& u, const Vec4& v);
Vec4 scale(double s, const Vec4& u);

/// Ambient bilinear form: the Euclidean dot product for curvature >= 0,
/// the (3,1) Minkowski form for the hyperbolic model.
double inner(Geometry g, const Vec4& u, const Vec4& v);

/// Geodesic distance between two model-space points.
double distance(Geometry g, const Vec4& p, const Vec4& q);

/// Unit tangent vector at p pointing along the geodesic toward q.
Vec4 tangent_toward(Geometry g, const Vec4& p, const Vec4& q);

/// Point reached from p after geodesic distance t along a unit tangent u.
Vec4 geodesic_point(Geometry g, const Vec4& p, const Vec4& u, double t);

/// Angle in [0, pi] between two tangent vectors based at the same point.
double angle_between(Geometry g, const Vec4& u, const Vec4& v);

/// Component of v orthogonal to the unit vector e, normalized.
Vec4 orthonormal_component(Geometry g, const Vec4& v, const Vec4& e);

} // namespace regge
