#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "tistim/types.hpp"

namespace tistim {

/// Tetrahedral volume mesh in millimetres.
///
/// Columns of `nodes` are coordinates, columns of `tets` are positively
/// oriented node quadruples. `boundary_tris` are outward oriented and
/// `tri_owner(k)` is the tet whose face is boundary triangle k.
struct TetMesh {
  Eigen::Matrix3Xd nodes;
  Eigen::Matrix4Xi tets;
  Eigen::VectorXi compartment;
  Eigen::Matrix3Xi boundary_tris;
  Eigen::VectorXi tri_owner;

  Index num_nodes() const { return nodes.cols(); }
  Index num_tets() const { return tets.cols(); }
  Index num_boundary_tris() const { return boundary_tris.cols(); }
};

/// A set of boundary triangles forming one electrode contact surface.
struct ElectrodePatch {
  std::string label;
  std::vector<int> tris;
  double area = 0.0;  // mm^2
  Vec3 center = Vec3::Zero();

  /// Sorted, unique node ids touched by the patch.
  std::vector<int> nodes(const TetMesh& mesh) const;
};

double tet_signed_volume(const TetMesh& mesh, Index tet);
double triangle_area(const TetMesh& mesh, Index tri);
Vec3 tet_centroid(const TetMesh& mesh, Index tet);
Vec3 triangle_centroid(const TetMesh& mesh, Index tri);
/// Longest edge of a tet.
double tet_diameter(const TetMesh& mesh, Index tet);

/// Constant gradients of the four barycentric basis functions of a tet
/// (1/mm). Throws NumericalError when the volume is below 1e-12 mm^3.
std::array<Vec3, 4> p1_gradients(const TetMesh& mesh, Index tet);

/// Checks the structural invariants; throws std::invalid_argument.
void validate(const TetMesh& mesh);
void validate(const TetMesh& mesh, const std::vector<ElectrodePatch>& patches);

/// Nested spherical shells centred at the origin. `radii` are outer radii of
/// each shell (innermost first); shell k is labelled `compartment_ids[k]`.
TetMesh generate_layered_sphere(const std::vector<double>& radii,
                                const std::vector<int>& compartment_ids,
                                double target_edge_len);

/// Boundary triangles whose centroids lie within the geodesic disc of the
/// given diameter around the point where the ray from the origin along
/// `direction` meets the boundary.
ElectrodePatch attach_electrode(const TetMesh& mesh, const Vec3& direction,
                                double diameter, const std::string& label);

struct ElectrodeSpec {
  std::string label;
  Vec3 direction;
  double diameter = 0.0;
};

/// Attaches several patches and rejects overlapping or duplicate labels.
std::vector<ElectrodePatch> attach_electrodes(
    const TetMesh& mesh, const std::vector<ElectrodeSpec>& specs);

/// Reflection x_axis -> -x_axis with orientation repaired. Cell and node
/// numbering is preserved, so cell k of the result is the mirror of cell k.
TetMesh mirror_mesh(const TetMesh& mesh, int axis);

/// Tets sharing at least one node with the given node set.
std::vector<int> adjacent_tets(const TetMesh& mesh, const std::vector<int>& nodes);

struct MeshFile {
  TetMesh mesh;
  std::vector<ElectrodePatch> patches;
};

void write_mesh(std::ostream& os, const TetMesh& mesh,
                const std::vector<ElectrodePatch>& patches);
MeshFile read_mesh(std::istream& is);

}  // namespace tistim
