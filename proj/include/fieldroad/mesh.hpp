#pragma once

#include <string>
#include <vector>

#include "fieldroad/geometry.hpp"

namespace fieldroad {

// Polygonal control volume of the field mesh. `vertices` indexes
// CoupledMesh::nodes in boundary order.
struct FieldCell {
    int id = -1;
    Point center;
    double measure = 0.0;
    std::vector<int> vertices;
};

enum class EdgeKind { interior, road, exterior };

// Field edge with its transmissivity tau = measure / distance.
// `left` is always a field cell; `right` is the neighbouring field cell
// (interior), the coinciding road cell (road), or -1 (exterior).
struct FieldEdge {
    int id = -1;
    EdgeKind kind = EdgeKind::exterior;
    double measure = 0.0;
    double distance = 0.0;
    double tau = 0.0;
    int left = -1;
    int right = -1;
    Point a, b; // endpoints
};

// Road control volume: the interval [left_x, right_x] on y = 0.
struct RoadCell {
    int id = -1;
    double center = 0.0;
    double left_x = 0.0;
    double right_x = 0.0;
    double measure = 0.0;
};

// Edge between two neighbouring road cells. For the 1-D road the edge is a
// point, so its measure is 1 by convention and tau = 1 / distance.
struct RoadEdge {
    int id = -1;
    int left = -1;
    int right = -1;
    double measure = 1.0;
    double distance = 0.0;
    double tau = 0.0;
    double position = 0.0;
};

/// Admissible mesh of the field plus a compatible mesh of the road.
/// Compatibility: every road cell coincides with exactly one road-kind field
/// edge (road_edge_of_cell is that bijection). Treat as immutable once built.
struct CoupledMesh {
    Geometry geometry;
    std::vector<Point> nodes;
    std::vector<FieldCell> field_cells;
    std::vector<FieldEdge> field_edges;
    std::vector<RoadCell> road_cells;
    std::vector<RoadEdge> road_edges;
    std::vector<int> road_edge_of_cell; // road cell id -> field edge id

    std::size_t unknown_count() const {
        return field_cells.size() + 2 * road_cells.size();
    }
};

/// Uniform nx-by-ny rectangular grid of the cylinder, with the road split
/// into the nx bottom-edge traces. Cartesian grids satisfy the orthogonality
/// and compatibility axioms exactly.
CoupledMesh build_cartesian(const Geometry& geometry, int nx, int ny);

struct Violation {
    std::string entity;  // e.g. "field_edge 12"
    std::string what;    // violated invariant
    double defect = 0.0; // measured defect
};

struct AdmissibilityReport {
    std::vector<Violation> violations;
    bool clean() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks every mesh invariant (positive measures, transmissivity identity,
/// orthogonality, road coupling bijection, global measures) and reports all
/// violations with the offending entity and the measured defect. Never throws
/// on a bad mesh; an empty report means admissible and compatible.
AdmissibilityReport verify_admissibility(const CoupledMesh& mesh);

// Tolerances shared by construction, import and verification.
inline constexpr double kOrthogonalityTol = 1e-10; // radians
inline constexpr double kCoincidenceTol = 1e-9;    // length units
inline constexpr double kGlobalMeasureTol = 1e-12; // relative

} // namespace fieldroad
