#pragma once

#include <Eigen/Core>
#include <optional>

#include "epitome/geometry.hpp"

namespace epitome {

//! An m x p matrix of atoms (columns). A dictionary may be "flat"
//! (free columns) or generated from an EpitomeSet, in which case the
//! generator records the geometry that produced it.
struct Dictionary {
  struct Generator {
    EpitomeGeometry geom;
    PatchShape patch;
  };

  Eigen::MatrixXd entries;  // m x p
  std::optional<Generator> generator;

  Dictionary() = default;
  explicit Dictionary(Eigen::MatrixXd d) : entries(std::move(d)) {}
  Dictionary(Eigen::MatrixXd d, Generator g) : entries(std::move(d)), generator(g) {}

  long atom_size() const { return entries.rows(); }   // m
  long atom_count() const { return entries.cols(); }  // p
};

}  // namespace epitome
