#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tistim/mesh.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string& token);

// Coordinate ("coo") text format, 0-based indices:
//
//   %%tistim-coo <rows> <cols> <entries>
//   <row> <col> <re> <im>
//   ...
//
// Entries are written column-major; exact zeros are skipped.

void write_coo(std::ostream& os, const SparseMatrixXc& m);
void write_coo(std::ostream& os, const MatrixXc& m);
/// Reads a coo file into a dense matrix.
MatrixXc read_coo_dense(std::istream& is);
SparseMatrixXc read_coo_sparse(std::istream& is);

struct CellData {
  std::map<std::string, Eigen::VectorXd> scalars;
  std::map<std::string, Eigen::Matrix3Xd> vectors;
};

/// Legacy VTK (ASCII, version 3.0) unstructured grid with per-cell data.
void write_vtk(std::ostream& os, const TetMesh& mesh, const CellData& data,
               const std::string& title);

/// Per-tet scalar CSV: `tet,value`.
void write_scalar_csv(std::ostream& os, const Eigen::VectorXd& values);
Eigen::VectorXd read_scalar_csv(std::istream& is);

/// Per-tet complex vector CSV: `tet,re_x,im_x,re_y,im_y,re_z,im_z`.
void write_vector_csv(std::ostream& os, const Eigen::Matrix3Xcd& values);
Eigen::Matrix3Xcd read_vector_csv(std::istream& is);

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for our purposes; throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tistim
