#pragma once

#include "regge/tetra.hpp"
#include "regge/volume.hpp"

namespace regge {

/// The edge transform (a,b,c,d) -> (s-a, s-b, s-c, s-d), s = (a+b+c+d)/2,
/// keeping x and y.
struct ReggeEdges {
    EdgeLengths source;
    double s = 0;
    EdgeLengths partner;
};

/// Logarithms of tangents of the half-angles between the edges a, b, c, d
/// and the x-edge.
struct LogTangentQuadruple {
    double A = 0, B = 0, C = 0, D = 0;
};

struct ReggeReport {
    bool partner_exists = false;

    double residual_phi = 0;
    double residual_psi = 0;
    double residual_alpha = 0;
    double residual_beta = 0;
    double residual_gamma = 0;
    double residual_delta = 0;
    double residual_logtan = 0;
    double residual_solid_angles = 0;
    double residual_volume = 0;

    double tolerance = 0;
    double volume_tolerance = 0;
    bool pass = false;

    EdgeLengths edges, partner_edges;
    DihedralAngles dihedrals, partner_dihedrals;
    double volume = 0, partner_volume = 0;
    double volume_error_estimate = 0;

    double max_angle_residual() const;
};

/// Throws NonpositivePartnerLength when some s - l <= 0.
ReggeEdges regge_edges(const EdgeLengths& e);

/// phi, psi unchanged; (alpha..delta) -> (sigma - alpha, ...), with sigma
/// half their sum.
DihedralAngles regge_angles(const DihedralAngles& d);

LogTangentQuadruple log_tangent_quadruple(const Tetrahedron& t);

/// The linear involution Abar = (-A+B+C+D)/2 and cyclic analogues;
/// preserves A+B+C+D.
LogTangentQuadruple predicted_log_tangents(const LogTangentQuadruple& q);

/// Builds the partner tetrahedron and fills all residuals: dihedral angles
/// at x and y, the sigma-reflection of alpha..delta, the log-tangent
/// quadruple, the four solid-angle pairs (F1<->F2, K<->L), and the volume.
/// The volume residual is relative when |vol| > 1e-6, absolute otherwise.
ReggeReport verify_regge(const Tetrahedron& t, double tol);
ReggeReport verify_regge(const Tetrahedron& t, double tol, double vol_tol,
                         const QuadratureOptions& quad_opts);

/// Geometry-specific default tolerance on the volume residual.
double default_volume_tolerance(Geometry g, double tol);

} // namespace regge
