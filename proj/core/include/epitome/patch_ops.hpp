#pragma once

#include <Eigen/Core>
#include <vector>

#include "epitome/dictionary.hpp"
#include "epitome/epitome_set.hpp"

namespace epitome {

//! Extract all overlapping patches from every epitome and arrange them as
//! dictionary columns. Column order is canonical and stable: epitome index
//! major, then patch corner row-major within the epitome. Linear in E.
Dictionary phi(const EpitomeSet& e, const PatchShape& patch);

//! Number of dictionary entries mapping to each epitome pixel, in the
//! same layout as EpitomeSet::pixels. Every count is >= 1 when the
//! geometry fits the patch shape.
std::vector<int> pixel_counts(const EpitomeGeometry& geom, const PatchShape& patch);

//! Averaging left inverse of phi: each epitome pixel is the arithmetic mean
//! of the dictionary entries mapping to it. phi_star(phi(E)) == E.
EpitomeSet phi_star(const Dictionary& d, const EpitomeGeometry& geom, const PatchShape& patch);

//! Orthogonal projection of an arbitrary m x p matrix onto the set of
//! dictionaries generated by the given geometry: phi(phi_star(D)).
Dictionary project(const Dictionary& d, const EpitomeGeometry& geom, const PatchShape& patch);

//! L2 norm of every column.
Eigen::VectorXd column_norms(const Dictionary& d);
Eigen::VectorXd column_norms(const Eigen::MatrixXd& d);

}  // namespace epitome
