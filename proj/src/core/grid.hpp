#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace polarlab {

/// Fixed set of unit directions used to sample support and radial functions.
///
/// For n = 2 the directions are exactly the N equally spaced angles 2*pi*k/N,
/// k = 0..N-1. For n >= 3 the grid is the union of {+-e_i} with seeded
/// quasi-uniform unit vectors, reproducible from the seed.
class DirectionGrid {
 public:
  static constexpr int kMinDirections = 8;

  /// Dot products at or below this threshold are treated as orthogonal.
  static constexpr double kAngleTol = 1e-12;

  static std::shared_ptr<const DirectionGrid> make(int dimension, int count,
                                                   std::uint64_t seed = 0);

  int dimension() const { return dimension_; }
  int size() const { return count_; }
  std::uint64_t seed() const { return seed_; }

  /// Pointer to the i-th unit direction (dimension() doubles).
  const double* direction(int i) const { return coords_.data() + static_cast<std::size_t>(i) * dimension_; }

  double dot(int i, const double* v) const;

  /// n = 2 only: angle of direction i, step between directions, and the
  /// cosine table cos(2*pi*d/N) with exact zeros snapped in.
  double angle_step() const { return angle_step_; }
  double cos_offset(int d) const { return cos_table_[d]; }

  /// Largest offset d with cos(2*pi*d/N) > 0 (n = 2).
  int positive_window() const { return positive_window_; }

  /// Index of the grid direction closest to v (any dimension).
  int nearest_index(const double* v) const;

  bool compatible_with(const DirectionGrid& other) const {
    return dimension_ == other.dimension_ && count_ == other.count_ && seed_ == other.seed_;
  }

 private:
  DirectionGrid() = default;

  int dimension_ = 0;
  int count_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<double> coords_;
  std::vector<double> cos_table_;
  double angle_step_ = 0.0;
  int positive_window_ = 0;
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

}  // namespace polarlab
