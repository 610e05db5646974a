#include "regge/geometry.hpp"

#include <cmath>

namespace regge {

const char* geometry_name(Geometry g) {
    switch (g) {
    case Geometry::euclidean: return "euclidean";
    case Geometry::spherical: return "spherical";
    case Geometry::hyperbolic: return "hyperbolic";
    }
    return "?";
}

Geometry geometry_from_name(const std::string& name) {
    if (name == "euclidean" || name == "e") return Geometry::euclidean;
    if (name == "spherical" || name == "s") return Geometry::spherical;
    if (name == "hyperbolic" || name == "h") return Geometry::hyperbolic;
    throw DomainError("unknown geometry '" + name + "'");
}

Vec4 add(const Vec4& u, const Vec4& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

Vec4 sub(const Vec4& u, const Vec4& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

Vec4 scale(double s, const Vec4& u) {
    return {s * u[0], s * u[1], s * u[2], s * u[3]};
}

double inner(Geometry g, const Vec4& u, const Vec4& v) {
    double spatial = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    return g == Geometry::hyperbolic ? spatial - u[3] * v[3] : spatial + u[3] * v[3];
}

double distance(Geometry g, const Vec4& p, const Vec4& q) {
    switch (g) {
    case Geometry::euclidean:
        return std::sqrt(inner(g, sub(p, q), sub(p, q)));
    case Geometry::spherical: {
        double c = inner(g, p, q);
        if (c > 0.0) {
            // chord form, accurate for short arcs
            Vec4 d = sub(p, q);
            return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(inner(g, d, d))));
        }
        return std::acos(std::max(-1.0, c));
    }
    case Geometry::hyperbolic: {
        // <p-q, p-q> = 2 cosh d - 2 = 4 sinh^2(d/2)
        Vec4 d = sub(p, q);
        double m = std::max(0.0, inner(g, d, d));
        return 2.0 * std::asinh(0.5 * std::sqrt(m));
    }
    }
    return 0.0;
}

Vec4 tangent_toward(Geometry g, const Vec4& p, const Vec4& q) {
    Vec4 w{};
    switch (g) {
    case Geometry::euclidean:
        w = sub(q, p);
        break;
    case Geometry::spherical:
        w = sub(q, scale(inner(g, p, q), p));
        break;
    case Geometry::hyperbolic:
        // <p,p> = -1, so the tangential component is q + <p,q> p
        w = add(q, scale(inner(g, p, q), p));
        break;
    }
    double n2 = inner(g, w, w);
    if (n2 <= 0.0)
        throw DomainError("tangent_toward: coincident or antipodal points");
    return scale(1.0 / std::sqrt(n2), w);
}

Vec4 geodesic_point(Geometry g, const Vec4& p, const Vec4& u, double t) {
    switch (g) {
    case Geometry::euclidean:
        return add(p, scale(t, u));
    case Geometry::spherical:
        return add(scale(std::cos(t), p), scale(std::sin(t), u));
    case Geometry::hyperbolic:
        return add(scale(std::cosh(t), p), scale(std::sinh(t), u));
    }
    return p;
}

double angle_between(Geometry g, const Vec4& u, const Vec4& v) {
    // 2*atan2(|u-v|, |u+v|) for unit vectors: stable at both 0 and pi.
    Vec4 d = sub(u, v), s = add(u, v);
    double nd = std::sqrt(std::max(0.0, inner(g, d, d)));
    double ns = std::sqrt(std::max(0.0, inner(g, s, s)));
    return 2.0 * std::atan2(nd, ns);
}

Vec4 orthonormal_component(Geometry g, const Vec4& v, const Vec4& e) {
    Vec4 w = sub(v, scale(inner(g, v, e), e));
    double n2 = inner(g, w, w);
    if (n2 <= 0.0)
        throw DomainError("orthonormal_component: vector parallel to axis");
    return scale(1.0 / std::sqrt(n2), w);
}

} // namespace regge
