#pragma once

#include <array>
#include <utility>
#include <vector>

#include "regge/tetra.hpp"

namespace regge {

/// Confocal family of conics (dim 2) or of rotationally swept quadrics
/// (dim 3) with semi-axis parameters A > B. Planar quadrics:
///   Euclidean   x^2/(A-l) + y^2/(B-l) = 1
///   spherical   x^2/(A-l) + y^2/(B-l) - z^2/(C+l) = 0   on x^2+y^2+z^2 = 1
///   hyperbolic  x^2/(A-l) + y^2/(B-l) - z^2/(C-l) = 0   on x^2+y^2-z^2 = -1
/// (the hyperbolic case needs C > A for proper foci). The dim-3 family
/// replaces y^2 by the squared distance from the focal axis and adds the
/// half-planes through the axis as the third coordinate hypersurfaces.
/// Points are stored as Vec4 with the distinguished component at index 3;
/// the sweep rotates the (1,2) component pair.
struct ConfocalFamily {
    Geometry geom = Geometry::euclidean;
    int dim = 2;
    double A = 0, B = 0;
    double C = 0; // unused when geom == euclidean
    bool degenerate_rotational = false;
};

enum class Band { ellipse, hyperbola };

/// Band of a parameter value; throws PoleParameter near a pole and
/// DomainError outside the two bands.
Band band_of(const ConfocalFamily& f, double lambda);

/// Parameter interval of a band as (lo, hi); the ellipse band of a
/// Euclidean or hyperbolic family is unbounded below (lo = -infinity).
std::pair<double, double> band_interval(const ConfocalFamily& f, Band band);

/// Left-hand side minus right-hand side of the defining equation at p.
double quadric_point_residual(const ConfocalFamily& f, double lambda, const Vec4& p);

/// The two roots of the defining equation through p, one per band, plus the
/// sweep angle for dim-3 families.
struct EllipticCoordinates {
    double lambda1 = 0; // ellipse band
    double lambda2 = 0; // hyperbola band
    double theta = 0;   // dim 3 only
};
EllipticCoordinates elliptic_coordinates(const ConfocalFamily& f, const Vec4& p);

/// Layer pair per band; dim-3 boxes add a pair of half-plane angles.
struct Box {
    ConfocalFamily family;
    std::array<double, 2> lambda_e{};
    std::array<double, 2> lambda_h{};
    std::array<double, 2> theta{};
    int sign_x = +1; // orthant of the corner coordinates
    int sign_y = +1;
};

/// Corner points, indexed by bits (i = ellipse choice, j = hyperbola
/// choice, k = plane choice for dim 3): 4 corners for dim 2, 8 for dim 3.
std::vector<Vec4> box_vertices(const Box& b);

struct IvoryCheck {
    std::vector<double> diagonals;
    double max_difference = 0;
};
/// Geodesic lengths of the great diagonals (corner i <-> corner with all
/// bits flipped) and their maximal pairwise difference.
IvoryCheck ivory_check(const Box& b);

/// Diagonal scaling of the ambient space carrying Q(lambda) to
/// Q(lambda_prime) within one band. Distinct factors on components 0, 1
/// (and 2, equal to 1) and 3.
struct DiagonalMap {
    std::array<double, 4> factor{1, 1, 1, 1};
};
DiagonalMap ivory_affine_map(const ConfocalFamily& f, double lambda, double lambda_prime);
Vec4 apply(const DiagonalMap& m, const Vec4& p);

/// Foci of the planar family on the first coordinate axis.
std::pair<Vec4, Vec4> family_foci(const ConfocalFamily& f);

/// Point of the conic Q(lambda): trigonometric parametrization on the
/// ellipse band, hyperbolic-function parametrization (one branch, positive
/// first coordinate) on the hyperbola band.
Vec4 conic_point(const ConfocalFamily& f, double lambda, double t);
/// Safe parameter bound for sampling (finite reach of the hyperbola band
/// on the hyperbolic plane; pi or a generic window elsewhere).
double conic_parameter_limit(const ConfocalFamily& f, double lambda);

/// Tangent direction of Q(lambda) at a point of the conic.
Vec4 conic_tangent(const ConfocalFamily& f, double lambda, const Vec4& p);

struct TangentInvariants {
    double product = 0; // tan(angle at f1 / 2) * tan(angle at f2 / 2)
    double ratio = 0;
};
/// Half-angle tangent invariants of p against the segment f1 f2.
TangentInvariants tangent_invariants(Geometry g, const Vec4& f1, const Vec4& f2,
                                     const Vec4& p);

/// The partner diagonal construction: Lbar in the plane of F1 F2 K on K's
/// side with |F1 Lbar| = s-c, |F2 Lbar| = s-d, and Kbar in the plane of
/// F1 F2 L with |F1 Kbar| = s-b, |F2 Kbar| = s-a. The returned distance
/// |Kbar Lbar| equals y by the equal-diagonal property.
struct PartnerPoints {
    Vec4 Kbar{};
    Vec4 Lbar{};
    double distance = 0;
};
PartnerPoints regge_partner_points(const Tetrahedron& t);

} // namespace regge
