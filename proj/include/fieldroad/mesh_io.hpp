#pragma once

#include <stdexcept>
#include <string>

#include "fieldroad/mesh.hpp"

namespace fieldroad {

struct MeshParseError : std::runtime_error {
    int line;
    MeshParseError(int line_, const std::string& msg)
        : std::runtime_error("mesh file line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct MeshCouplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MeshAdmissibilityError : std::runtime_error {
    AdmissibilityReport report;
    explicit MeshAdmissibilityError(AdmissibilityReport r)
        : std::runtime_error("mesh is not admissible:\n" + r.to_string()),
          report(std::move(r)) {}
};

/// Parses the line-oriented mesh format:
///   fieldroad-mesh 1
///   geometry <omega_min> <omega_max> <height>
///   nodes <n>      followed by "index x y" lines
///   cells <n>      followed by "index vcount v0 ... vk cx cy" lines
///   roadcells <n>  followed by "index leftx rightx centerx" lines
/// Edges and transmissivities are recomputed from the node coordinates;
/// the road coupling is built by midpoint coincidence (1e-9).
/// With verify=true (default) a non-admissible mesh raises
/// MeshAdmissibilityError carrying the full report.
CoupledMesh import_mesh(const std::string& text, bool verify = true);

/// Inverse of import_mesh for meshes that carry node/vertex data
/// (anything produced by build_cartesian or import_mesh).
std::string write_mesh(const CoupledMesh& mesh);

} // namespace fieldroad
