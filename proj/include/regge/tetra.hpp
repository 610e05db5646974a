#pragma once

#include <array>
#include <utility>

#include "regge/geometry.hpp"
#include "regge/numerics.hpp"

namespace regge {

/// Edge labels. Vertices F1, F2, K, L carry
///   x = |F1F2|, y = |KL|, a = |F1K|, b = |F2K|, c = |F2L|, d = |F1L|,
/// so the opposite pairs are (x,y), (a,c), (b,d) and the four faces are
/// (x,a,b), (x,c,d), (y,a,d), (y,b,c).
enum class EdgeLabel : int { x = 0, y, a, b, c, d };
enum class VertexLabel : int { F1 = 0, F2, K, L };

struct EdgeLengths {
    double x = 0, y = 0, a = 0, b = 0, c = 0, d = 0;

    double operator[](EdgeLabel e) const;
    double& operator[](EdgeLabel e);
    std::array<double, 6> as_array() const { return {x, y, a, b, c, d}; }
};

std::pair<VertexLabel, VertexLabel> edge_endpoints(EdgeLabel e);
std::array<EdgeLabel, 3> edges_at_vertex(VertexLabel v);
/// Distance between two labeled vertices.
double vertex_distance(const EdgeLengths& e, VertexLabel p, VertexLabel q);

/// Interior dihedral angles: phi at the x-edge, psi at y, then alpha..delta
/// at a, b, c, d.
struct DihedralAngles {
    double phi = 0, psi = 0, alpha = 0, beta = 0, gamma = 0, delta = 0;
    double operator[](EdgeLabel e) const;
    double& operator[](EdgeLabel e);
};

/// Vertex coordinates in the ambient space, order F1, F2, K, L. F1 sits at
/// the base point, F2 on the first coordinate axis, K in the first
/// coordinate 2-plane with positive second component, L with positive third
/// component.
struct Embedding {
    std::array<Vec4, 4> vertex{};
};

struct Tetrahedron {
    Geometry geom = Geometry::euclidean;
    EdgeLengths edges;
    Embedding embedding;
};

/// Existence matrix bundle: the 4x4 vertex Gram matrix for the curved
/// geometries or the 5x5 bordered distance matrix for the Euclidean case
/// (stored in the top-left block), with determinant and cofactors.
struct GramData {
    int dim = 4;
    Mat<5> matrix{};
    Mat<5> cofactors{};
    double determinant = 0;
};

// Relative determinant threshold separating degenerate from valid.
inline constexpr double kExistenceTol = 1e-10;

/// Existence check plus deterministic embedding. Throws
/// NonexistentTetrahedron or DegenerateTetrahedron.
Tetrahedron validate(Geometry g, const EdgeLengths& e);

/// Scaled existence criterion: positive iff the edges bound a tetrahedron,
/// with magnitude acting as a degeneracy margin. Does not throw on failure.
double existence_margin(Geometry g, const EdgeLengths& e);

DihedralAngles dihedral_angles(const Tetrahedron& t);

/// Geodesic angle between two edges sharing a vertex, measured inside their
/// common face. Throws InvalidPair for opposite edges.
double face_angle(const Tetrahedron& t, EdgeLabel e1, EdgeLabel e2);

/// Area of the unit-sphere vertex link: sum of the three incident dihedral
/// angles minus pi.
double solid_angle(const Tetrahedron& t, VertexLabel v);

GramData gram_data(const Tetrahedron& t);

/// Bordered distance matrix in the fixed layout (rows: border, K, F1, F2, L).
Mat<5> cayley_menger_matrix(const EdgeLengths& e);
/// Vertex Gram matrix, order F1, F2, K, L.
Mat<4> vertex_gram_matrix(Geometry g, const EdgeLengths& e);

} // namespace regge
