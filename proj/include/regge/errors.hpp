#pragma once

#include <stdexcept>
#include <string>

namespace regge {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error { using Error::Error; };

// Triangle data on or past the boundary of the triangle inequalities.
struct DegenerateTriangle : Error { using Error::Error; };

// Six edge lengths that do not bound a tetrahedron in the given geometry.
struct NonexistentTetrahedron : Error { using Error::Error; };
// Existence criterion within tolerance of zero.
struct DegenerateTetrahedron : Error { using Error::Error; };
// Two edge labels that do not share a vertex.
struct InvalidPair : Error { using Error::Error; };

// Edge transform produced a nonpositive partner length.
struct NonpositivePartnerLength : Error { using Error::Error; };
// Partner tetrahedron failed validation (numerical-tolerance failure).
struct PartnerNonexistent : Error { using Error::Error; };

// Quadric parameter coincides with a squared semi-axis.
struct PoleParameter : Error { using Error::Error; };
// Point on the degeneracy set of the elliptic coordinate system.
struct DegeneratePoint : Error { using Error::Error; };
// Box parameters select an empty or zero-thickness intersection.
struct EmptyBox : Error { using Error::Error; };
// Affine map requested between quadrics of different type.
struct BandMismatch : Error { using Error::Error; };
// Point collinear with the foci.
struct DegenerateConfiguration : Error { using Error::Error; };
// Partner-point triangles violate the triangle inequalities.
struct ConstructionFailure : Error { using Error::Error; };

// No deformation parameter yields a valid tetrahedron.
struct NoValidRange : Error { using Error::Error; };
// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error { using Error::Error; };
// Derivative requested too close to a degeneration.
struct NearDegenerate : Error { using Error::Error; };

} // namespace regge
