#pragma once

#include <Eigen/Core>

#include "epitome/geometry.hpp"

namespace epitome {

//! The learned parameter vector E: N small images of identical shape.
//! Pixels are stored row-major inside each epitome, epitomes concatenated,
//! so pixel (r, c) of epitome e lives at e*height*width + r*width + c.
struct EpitomeSet {
  EpitomeGeometry geom;
  Eigen::VectorXd pixels;

  EpitomeSet() = default;
  EpitomeSet(EpitomeGeometry g, Eigen::VectorXd px) : geom(g), pixels(std::move(px)) {
    validate();
  }

  double& at(int epitome, int row, int col) {
    return pixels[static_cast<long>(epitome) * geom.height * geom.width +
                  static_cast<long>(row) * geom.width + col];
  }
  double at(int epitome, int row, int col) const {
    return pixels[static_cast<long>(epitome) * geom.height * geom.width +
                  static_cast<long>(row) * geom.width + col];
  }

  void validate() const {
    geom.validate();
    if (pixels.size() != geom.pixel_count())
      throw std::invalid_argument("EpitomeSet: pixel vector length does not match geometry");
    if (!pixels.allFinite())
      throw std::invalid_argument("EpitomeSet: non-finite pixel values");
  }
};

}  // namespace epitome
