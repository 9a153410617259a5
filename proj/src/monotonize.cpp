#include "dihom/monotonize.hpp"

#include <algorithm>
#include <string>

#include "dihom/errors.hpp"

namespace dihom {

GridFunction::GridFunction(std::size_t nx, std::size_t ny, std::size_t dim_out)
    : nx_(nx), ny_(ny), values_(Values::Zero(static_cast<Eigen::Index>(nx * ny), static_cast<Eigen::Index>(dim_out))),
      absent_(nx * ny, 0) {
  if (nx == 0 || ny == 0) throw InputError("grid function needs at least one vertex per axis");
  if (dim_out == 0) throw InputError("grid function needs dim_out >= 1");
}

GridFunction GridFunction::constant(std::size_t nx, std::size_t ny, std::size_t dim_out, double value) {
  GridFunction f(nx, ny, dim_out);
  f.values_.setConstant(value);
  return f;
}

GridFunction GridFunction::identity_sampling(std::size_t nx, std::size_t ny, std::size_t dim_out) {
  if (dim_out > 2) throw UnsupportedError("identity sampling is defined for [0,1] and [0,1]^2 only");
  GridFunction f(nx, ny, dim_out);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      f.at(i, j)(0) = nx > 1 ? static_cast<double>(i) / static_cast<double>(nx - 1) : 0.0;
      if (dim_out == 2) f.at(i, j)(1) = ny > 1 ? static_cast<double>(j) / static_cast<double>(ny - 1) : 0.0;
    }
  return f;
}

bool GridFunction::has_absent() const noexcept {
  return std::any_of(absent_.begin(), absent_.end(), [](auto a) { return a != 0; });
}

bool GridFunction::same_domain(const GridFunction& o) const noexcept {
  return nx_ == o.nx_ && ny_ == o.ny_ && dim_out() == o.dim_out() && absent_ == o.absent_;
}

void GridFunction::validate() const {
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j) {
      if (absent(i, j)) continue;
      auto row = at(i, j);
      if (!(row >= 0.0).all() || !(row <= 1.0).all())
        throw InputError("value at vertex (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") lies outside [0,1]");
    }
}

bool operator==(const GridFunction& a, const GridFunction& b) {
  if (!a.same_domain(b)) return false;
  for (std::size_t i = 0; i < a.nx_; ++i)
    for (std::size_t j = 0; j < a.ny_; ++j)
      if (!a.absent(i, j) && !(a.at(i, j) == b.at(i, j)).all()) return false;
  return true;
}

std::optional<VertexWitness> monotonicity_violation(const GridFunction& f) {
  const std::size_t nx = f.nx(), ny = f.ny();
  if (!f.has_absent()) {
    // on a full grid the order is generated by unit steps
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) {
        if (i + 1 < nx && !(f.at(i, j) <= f.at(i + 1, j)).all()) return VertexWitness{{i, j}, {i + 1, j}};
        if (j + 1 < ny && !(f.at(i, j) <= f.at(i, j + 1)).all()) return VertexWitness{{i, j}, {i, j + 1}};
      }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      if (f.absent(i, j)) continue;
      for (std::size_t i2 = i; i2 < nx; ++i2)
        for (std::size_t j2 = j; j2 < ny; ++j2)
          if (!f.absent(i2, j2) && !(f.at(i, j) <= f.at(i2, j2)).all()) return VertexWitness{{i, j}, {i2, j2}};
    }
  return std::nullopt;
}

bool pointwise_leq(const GridFunction& f, const GridFunction& g) {
  if (!f.same_domain(g)) throw InputError("grid functions live on different domains");
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j)
      if (!f.absent(i, j) && !(f.at(i, j) <= g.at(i, j)).all()) return false;
  return true;
}

MonotoneMap retract_map_finite(const RawMap& f, const FiniteLattice& target) {
  if (!(f.target() == target.poset())) throw InputError("map target is not the given lattice");
  const auto& src = f.source();
  std::vector<Index> values(src.size());
  for (Index x = 0; x < src.size(); ++x) {
    Index acc = target.top();
    for (Index y : src.above(x).indices()) acc = target.meet(acc, f(y));
    values[x] = acc;
  }
  return MonotoneMap(RawMap(src, f.target(), std::move(values)));
}

GridFunction retract_map_grid(const GridFunction& f) {
  if (f.has_absent())
    throw UnsupportedError(
        "grid has absent vertices, so up-sets are not grid suffixes; use the vertex-poset retraction");
  GridFunction g = f;
  for (std::size_t i = f.nx(); i-- > 0;)
    for (std::size_t j = f.ny(); j-- > 0;) {
      if (i + 1 < f.nx()) g.at(i, j) = g.at(i, j).min(g.at(i + 1, j));
      if (j + 1 < f.ny()) g.at(i, j) = g.at(i, j).min(g.at(i, j + 1));
    }
  return g;
}

GridFunction retract_map_vertex_poset(const GridFunction& f) {
  GridFunction g = f;
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j) {
      if (f.absent(i, j)) continue;
      for (std::size_t i2 = i; i2 < f.nx(); ++i2)
        for (std::size_t j2 = j; j2 < f.ny(); ++j2)
          if (!f.absent(i2, j2)) g.at(i, j) = g.at(i, j).min(f.at(i2, j2));
    }
  return g;
}

namespace {

void check_times(const std::vector<double>& times, std::size_t frames) {
  if (frames < 2) throw InputError("a homotopy needs at least two frames");
  if (times.size() != frames) throw InputError("time sample count differs from frame count");
  if (times.front() != 0.0 || times.back() != 1.0) throw InputError("time samples must start at 0 and end at 1");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InputError("time samples must strictly increase");
}

std::vector<double> uniform_times(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
  if (n > 0) t.back() = 1.0;
  return t;
}

}  // namespace

TimedHomotopy::TimedHomotopy(std::vector<GridFunction> frames, std::vector<double> times)
    : frames_(std::move(frames)), times_(std::move(times)) {
  check_times(times_, frames_.size());
  for (const auto& f : frames_)
    if (!f.same_domain(frames_.front())) throw InputError("homotopy frames live on different domains");
}

TimedHomotopy TimedHomotopy::uniform(std::vector<GridFunction> frames) {
  auto t = uniform_times(frames.size());
  return TimedHomotopy(std::move(frames), std::move(t));
}

FiniteHomotopy::FiniteHomotopy(std::vector<RawMap> frames, std::vector<double> times)
    : frames_(std::move(frames)), times_(std::move(times)) {
  check_times(times_, frames_.size());
  for (const auto& f : frames_)
    if (!(f.source() == frames_.front().source()) || !(f.target() == frames_.front().target()))
      throw InputError("homotopy frames have different source or target");
}

FiniteHomotopy FiniteHomotopy::uniform(std::vector<RawMap> frames) {
  auto t = uniform_times(frames.size());
  return FiniteHomotopy(std::move(frames), std::move(t));
}

TimedHomotopy retract_homotopy(const TimedHomotopy& h) {
  std::vector<GridFunction> out;
  out.reserve(h.size());
  for (const auto& f : h.frames())
    out.push_back(f.has_absent() ? retract_map_vertex_poset(f) : retract_map_grid(f));
  return TimedHomotopy(std::move(out), h.times());
}

FiniteHomotopy retract_homotopy(const FiniteHomotopy& h, const FiniteLattice& target) {
  std::vector<RawMap> out;
  out.reserve(h.size());
  for (const auto& f : h.frames()) out.push_back(retract_map_finite(f, target).raw());
  return FiniteHomotopy(std::move(out), h.times());
}

}  // namespace dihom
