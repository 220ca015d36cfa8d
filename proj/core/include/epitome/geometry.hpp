#pragma once

#include <stdexcept>
#include <string>

namespace epitome {

//! Patch geometry. A patch is a height x width block of pixels,
//! vectorized in row-major order into a column of m = height*width entries.
struct PatchShape {
  int height = 0;
  int width = 0;

  int pixel_count() const { return height * width; }

  void validate() const {
    if (height < 1 || width < 1)
      throw std::invalid_argument("PatchShape: dimensions must be >= 1, got " +
                                  std::to_string(height) + "x" + std::to_string(width));
  }

  bool operator==(const PatchShape&) const = default;
};

//! Geometry of a set of N small images ("epitomes") of identical shape.
struct EpitomeGeometry {
  int count = 0;   // N
  int height = 0;  // rows of each epitome
  int width = 0;   // columns of each epitome

  //! Total number of parameters M = N * height * width.
  long pixel_count() const { return static_cast<long>(count) * height * width; }

  //! True when every epitome can host at least one patch of the given shape.
  bool fits(const PatchShape& patch) const {
    return height >= patch.height && width >= patch.width;
  }

  //! Overlapping patch positions inside one epitome.
  int patches_per_epitome(const PatchShape& patch) const {
    return (height - patch.height + 1) * (width - patch.width + 1);
  }

  //! Total atom count p over all epitomes.
  long patch_count(const PatchShape& patch) const {
    return static_cast<long>(count) * patches_per_epitome(patch);
  }

  void validate() const {
    if (count < 1 || height < 1 || width < 1)
      throw std::invalid_argument("EpitomeGeometry: count and dimensions must be >= 1");
  }

  void validate_against(const PatchShape& patch) const {
    validate();
    patch.validate();
    if (!fits(patch))
      throw std::invalid_argument(
          "EpitomeGeometry: patch " + std::to_string(patch.height) + "x" +
          std::to_string(patch.width) + " does not fit into epitome " +
          std::to_string(height) + "x" + std::to_string(width));
  }

  bool operator==(const EpitomeGeometry&) const = default;
};

}  // namespace epitome
