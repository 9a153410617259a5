#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "dihom/order.hpp"

namespace dihom {

/// Samples of a map into [0,1]^k on an nx-by-ny vertex grid.
///
/// Values are stored one vertex per row (vertex (i, j) is row i * ny + j), so
/// the componentwise-min lattice operations are row-wise Eigen expressions.
/// Absent vertices (inside a forbidden region) carry no value and are never
/// read by any operation.
class GridFunction {
 public:
  using Values = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  GridFunction(std::size_t nx, std::size_t ny, std::size_t dim_out);

  static GridFunction constant(std::size_t nx, std::size_t ny, std::size_t dim_out, double value);
  /// Vertex (i, j) -> (i/(nx-1), j/(ny-1)), truncated to dim_out <= 2
  /// coordinates: the identity of [0,1] or [0,1]^2 sampled on the grid.
  static GridFunction identity_sampling(std::size_t nx, std::size_t ny, std::size_t dim_out);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t dim_out() const noexcept { return static_cast<std::size_t>(values_.cols()); }
  std::size_t vertex(std::size_t i, std::size_t j) const noexcept { return i * ny_ + j; }

  auto at(std::size_t i, std::size_t j) { return values_.row(static_cast<Eigen::Index>(vertex(i, j))); }
  auto at(std::size_t i, std::size_t j) const { return values_.row(static_cast<Eigen::Index>(vertex(i, j))); }
  Values& values() noexcept { return values_; }
  const Values& values() const noexcept { return values_; }

  bool absent(std::size_t i, std::size_t j) const noexcept { return absent_[vertex(i, j)] != 0; }
  void set_absent(std::size_t i, std::size_t j, bool a = true) { absent_[vertex(i, j)] = a; }
  bool has_absent() const noexcept;

  /// Same shape, same absent mask.
  bool same_domain(const GridFunction& o) const noexcept;
  /// Throws InputError unless every present value lies in [0,1].
  void validate() const;

  friend bool operator==(const GridFunction& a, const GridFunction& b);

 private:
  std::size_t nx_, ny_;
  Values values_;
  std::vector<std::uint8_t> absent_;
};

struct VertexWitness {
  std::array<std::size_t, 2> lower;  // vertex below ...
  std::array<std::size_t, 2> upper;  // ... whose value is not below
};

/// Vertex-monotone: v <= w componentwise among present vertices implies
/// f(v) <= f(w) componentwise.
std::optional<VertexWitness> monotonicity_violation(const GridFunction& f);
inline bool is_vertex_monotone(const GridFunction& f) { return !monotonicity_violation(f); }

/// Pointwise componentwise f <= g on present vertices.
bool pointwise_leq(const GridFunction& f, const GridFunction& g);

/// x -> meet of f over the up-set of x, into a finite lattice.
MonotoneMap retract_map_finite(const RawMap& f, const FiniteLattice& target);

/// Reverse sweep g(i,j) = min(f(i,j), g(i+1,j), g(i,j+1)) on a full grid.
/// Throws UnsupportedError when vertices are absent.
GridFunction retract_map_grid(const GridFunction& f);

/// Meet over the up-set of each present vertex within the present vertices;
/// correct on holed domains, quadratic in the vertex count.
GridFunction retract_map_vertex_poset(const GridFunction& f);

/// A time-sampled family of grid maps; times strictly increase from 0 to 1.
class TimedHomotopy {
 public:
  TimedHomotopy(std::vector<GridFunction> frames, std::vector<double> times);
  /// Uniform time samples 0, 1/(n-1), ..., 1.
  static TimedHomotopy uniform(std::vector<GridFunction> frames);

  const std::vector<GridFunction>& frames() const noexcept { return frames_; }
  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return frames_.size(); }
  const GridFunction& first() const { return frames_.front(); }
  const GridFunction& last() const { return frames_.back(); }

  friend bool operator==(const TimedHomotopy& a, const TimedHomotopy& b) {
    return a.times_ == b.times_ && a.frames_ == b.frames_;
  }

 private:
  std::vector<GridFunction> frames_;
  std::vector<double> times_;
};

/// A time-sampled family of maps between finite posets, all with the same
/// source and target.
class FiniteHomotopy {
 public:
  FiniteHomotopy(std::vector<RawMap> frames, std::vector<double> times);
  static FiniteHomotopy uniform(std::vector<RawMap> frames);

  const std::vector<RawMap>& frames() const noexcept { return frames_; }
  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return frames_.size(); }

  friend bool operator==(const FiniteHomotopy& a, const FiniteHomotopy& b) {
    return a.times_ == b.times_ && a.frames_ == b.frames_;
  }

 private:
  std::vector<RawMap> frames_;
  std::vector<double> times_;
};

/// Frame-by-frame retraction; time carries no order, so no meets across frames.
TimedHomotopy retract_homotopy(const TimedHomotopy& h);
FiniteHomotopy retract_homotopy(const FiniteHomotopy& h, const FiniteLattice& target);

}  // namespace dihom
