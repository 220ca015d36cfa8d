#include "epitome/patch_ops.hpp"

#include <stdexcept>
#include <string>

namespace epitome {

namespace {

void check_dictionary_shape(const Dictionary& d, const EpitomeGeometry& geom,
                            const PatchShape& patch) {
  geom.validate_against(patch);
  if (d.atom_size() != patch.pixel_count() || d.atom_count() != geom.patch_count(patch))
    throw std::invalid_argument(
        "dictionary shape " + std::to_string(d.atom_size()) + "x" +
        std::to_string(d.atom_count()) + " inconsistent with geometry (expected " +
        std::to_string(patch.pixel_count()) + "x" + std::to_string(geom.patch_count(patch)) + ")");
}

}  // namespace

Dictionary phi(const EpitomeSet& e, const PatchShape& patch) {
  e.geom.validate_against(patch);
  const int ph = patch.height, pw = patch.width;
  const int eh = e.geom.height, ew = e.geom.width;
  const int corners_h = eh - ph + 1, corners_w = ew - pw + 1;
  const long p = e.geom.patch_count(patch);

  Eigen::MatrixXd d(patch.pixel_count(), p);
  long col = 0;
  for (int n = 0; n < e.geom.count; ++n) {
    const long base = static_cast<long>(n) * eh * ew;
    for (int cr = 0; cr < corners_h; ++cr)
      for (int cc = 0; cc < corners_w; ++cc, ++col)
        for (int r = 0; r < ph; ++r)
          for (int c = 0; c < pw; ++c)
            d(r * pw + c, col) = e.pixels[base + static_cast<long>(cr + r) * ew + (cc + c)];
  }
  return Dictionary(std::move(d), Dictionary::Generator{e.geom, patch});
}

std::vector<int> pixel_counts(const EpitomeGeometry& geom, const PatchShape& patch) {
  geom.validate_against(patch);
  const int ph = patch.height, pw = patch.width;
  const int eh = geom.height, ew = geom.width;
  std::vector<int> counts(geom.pixel_count(), 0);
  // One epitome's map, then replicated: the overlap structure is identical.
  std::vector<int> one(static_cast<size_t>(eh) * ew, 0);
  for (int cr = 0; cr + ph <= eh; ++cr)
    for (int cc = 0; cc + pw <= ew; ++cc)
      for (int r = 0; r < ph; ++r)
        for (int c = 0; c < pw; ++c) ++one[static_cast<size_t>(cr + r) * ew + (cc + c)];
  for (int n = 0; n < geom.count; ++n)
    std::copy(one.begin(), one.end(), counts.begin() + static_cast<long>(n) * eh * ew);
  return counts;
}

EpitomeSet phi_star(const Dictionary& d, const EpitomeGeometry& geom, const PatchShape& patch) {
  check_dictionary_shape(d, geom, patch);
  const int ph = patch.height, pw = patch.width;
  const int eh = geom.height, ew = geom.width;
  const int corners_h = eh - ph + 1, corners_w = ew - pw + 1;

  Eigen::VectorXd sums = Eigen::VectorXd::Zero(geom.pixel_count());
  long col = 0;
  for (int n = 0; n < geom.count; ++n) {
    const long base = static_cast<long>(n) * eh * ew;
    for (int cr = 0; cr < corners_h; ++cr)
      for (int cc = 0; cc < corners_w; ++cc, ++col)
        for (int r = 0; r < ph; ++r)
          for (int c = 0; c < pw; ++c)
            sums[base + static_cast<long>(cr + r) * ew + (cc + c)] += d.entries(r * pw + c, col);
  }
  const std::vector<int> counts = pixel_counts(geom, patch);
  for (long i = 0; i < sums.size(); ++i) sums[i] /= counts[static_cast<size_t>(i)];
  return EpitomeSet(geom, std::move(sums));
}

Dictionary project(const Dictionary& d, const EpitomeGeometry& geom, const PatchShape& patch) {
  return phi(phi_star(d, geom, patch), patch);
}

Eigen::VectorXd column_norms(const Eigen::MatrixXd& d) {
  return d.colwise().norm();
}

Eigen::VectorXd column_norms(const Dictionary& d) {
  return column_norms(d.entries);
}

}  // namespace epitome
