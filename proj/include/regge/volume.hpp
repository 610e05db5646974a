#pragma once

#include <vector>

#include "regge/tetra.hpp"

namespace regge {

struct QuadratureOptions {
    double abs_tol = 1e-8;
    int max_subdivisions = 20000;
    bool endpoint_substitution = true;
};

struct VolumeResult {
    double value = 0;
    double error_estimate = 0;
};

/// Euclidean volume from the bordered distance determinant, sqrt(det/288).
double volume_euclidean_cm(const EdgeLengths& e);

/// Euclidean volume from the two faces adjacent to the chosen edge:
/// (2/3) * A1 * A2 * sin(theta) / ell.
double volume_euclidean_two_face(const Tetrahedron& t, EdgeLabel edge);

/// Hinge interval of the y-edge for fixed x, a, b, c, d (e.y is ignored):
/// y_min at dihedral angle 0 at the x-edge, y_max at angle pi.
struct FoldingRange {
    double y_min = 0;
    double y_max = 0;
};
FoldingRange folding_range(Geometry g, const EdgeLengths& e);

/// Flattening value of y (dihedral angle at the x-edge reaches pi), refined
/// as a root of the existence determinant. Throws NoValidRange when the two
/// fixed faces do not exist.
double flattening_parameter(Geometry g, const EdgeLengths& e);

/// Volume of a curved tetrahedron by integrating (+-)1/2 sum l_i dtheta_i
/// along the y-hinge, anchored at zero volume where the hinge closes flat.
VolumeResult volume_schlafli(const Tetrahedron& t, const QuadratureOptions& opts = {});

/// (+-)1/2 sum_i l_i dtheta_i/dl with respect to the chosen edge length
/// (plain 1/2 sum for the Euclidean case, where it vanishes identically).
double schlafli_form(const Tetrahedron& t, EdgeLabel direction);

/// Geometry dispatch: bordered determinant for Euclidean, hinge integration
/// otherwise. The error estimate is zero for the Euclidean route.
VolumeResult volume(const Tetrahedron& t);

/// Sampled record of the hinge deformation y = t.
struct SchlafliPath {
    struct Sample {
        double t = 0;
        DihedralAngles angles;
        double dvol_dt = 0;
    };
    Geometry geom = Geometry::euclidean;
    EdgeLengths base;
    double t_start = 0; // flattening value of y
    double t_end = 0;
    std::vector<Sample> samples;
};
SchlafliPath make_schlafli_path(Geometry g, const EdgeLengths& base, double t_end,
                                int n_samples);

} // namespace regge
