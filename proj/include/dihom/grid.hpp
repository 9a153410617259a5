#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dihom::grid {

using Point = std::array<double, 2>;

/// Axis-aligned box with per-face openness. A degenerate axis (lo == hi) is
/// always closed on both faces.
struct Box {
  Point lo{};
  Point hi{};
  std::array<bool, 2> lo_open{};
  std::array<bool, 2> hi_open{};

  static Box closed(Point lo, Point hi);
  /// Open on every non-degenerate axis.
  static Box open(Point lo, Point hi);

  bool degenerate(int axis) const noexcept { return lo[axis] == hi[axis]; }
  bool contains(const Point& p) const noexcept;
  Point center() const noexcept { return {(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2}; }

  friend bool operator==(const Box&, const Box&) = default;
};

bool leq(const Point& a, const Point& b) noexcept;
Point componentwise_max(const Point& a, const Point& b) noexcept;

/// Compact planar pospace: a union of closed boxes minus a union of open
/// boxes, ordered componentwise, together with its canonical decomposition
/// into cells (products of breakpoint atoms).
///
/// Along each axis the sorted breakpoints b_0 < ... < b_{n-1} give 2n-1
/// atoms: atom 2i is the point b_i, atom 2i+1 the open interval (b_i, b_{i+1}).
/// Every cell lies entirely inside or entirely outside the point set.
class GridComplex {
 public:
  static GridComplex build(const Box& bounds, std::vector<Box> forbidden);
  static GridComplex build(std::vector<Box> pieces, std::vector<Box> forbidden);

  /// Same point set, decomposition refined by extra breakpoints (values
  /// outside the hull are ignored).
  GridComplex refined(const std::vector<double>& xs, const std::vector<double>& ys) const;

  const std::vector<Box>& pieces() const noexcept { return d_->pieces; }
  const std::vector<Box>& forbidden() const noexcept { return d_->forbidden; }
  const Box& hull() const noexcept { return d_->hull; }

  /// Direct membership test against pieces and forbidden boxes.
  bool contains(const Point& p) const noexcept;

  const std::vector<double>& breaks(int axis) const noexcept { return d_->breaks[axis]; }
  std::size_t atoms(int axis) const noexcept { return 2 * d_->breaks[axis].size() - 1; }
  std::size_t cell_count() const noexcept { return atoms(0) * atoms(1); }
  std::size_t cell(std::size_t ax, std::size_t ay) const noexcept { return ax * atoms(1) + ay; }
  std::array<std::size_t, 2> atoms_of(std::size_t c) const noexcept { return {c / atoms(1), c % atoms(1)}; }

  bool in_space(std::size_t c) const noexcept { return d_->inside[c] != 0; }
  /// Representative point of a cell (midpoint of each open atom).
  Point cell_point(std::size_t c) const noexcept;
  Box cell_box(std::size_t c) const noexcept;
  double atom_point(int axis, std::size_t a) const noexcept;
  std::optional<std::size_t> atom_of(int axis, double v) const noexcept;
  std::optional<std::size_t> cell_of(const Point& p) const noexcept;
  /// Box spanning atoms [a0, a1] x [b0, b1] with matching face openness.
  Box atom_span_box(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) const noexcept;

  /// Cells whose closure contains cell c (c included), restricted to the space.
  std::vector<std::size_t> star(std::size_t c) const;

 private:
  struct Data {
    std::vector<Box> pieces;
    std::vector<Box> forbidden;
    Box hull;
    std::array<std::vector<double>, 2> breaks;
    std::vector<std::uint8_t> inside;
  };
  explicit GridComplex(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static GridComplex make(std::vector<Box> pieces, std::vector<Box> forbidden,
                          std::array<std::vector<double>, 2> extra);
  std::shared_ptr<const Data> d_;
};

/// A union of cells of a complex, always a subset of the space.
class Region {
 public:
  Region(GridComplex complex, std::vector<std::uint8_t> cells);
  static Region none(const GridComplex& complex);
  static Region whole(const GridComplex& complex);

  const GridComplex& complex() const noexcept { return complex_; }
  bool has_cell(std::size_t c) const noexcept { return cells_[c] != 0; }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
  bool contains(const Point& p) const noexcept;
  bool empty() const noexcept;
  std::size_t cell_total() const noexcept;

  /// Complement inside the space.
  Region complement() const;
  bool is_subset_of(const Region& o) const;
  /// Cell-wise union; both regions must live on the same decomposition.
  Region operator|(const Region& o) const;
  Region operator&(const Region& o) const;
  friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

  /// Decomposition into maximal column runs merged across columns.
  std::vector<Box> boxes() const;
  /// Bounding point: componentwise supremum of the region's closure.
  std::optional<Point> upper_corner() const;

 private:
  GridComplex complex_;
  std::vector<std::uint8_t> cells_;
};

/// A relatively open subset given by boxes, intersected with the ambient space.
struct OpenRegion {
  std::vector<Box> pieces;
};

/// Refines `x` by the breakpoints of `v` and returns the cells of x inside v.
Region realize(const GridComplex& x, const OpenRegion& v);
bool is_open(const Region& r);

/// Order closures inside the region's space.
Region down_closure(const Region& r);
Region up_closure(const Region& r);

GridComplex build_complex(const Box& bounds, std::vector<Box> forbidden);

/// The down-set of a relatively open region. Throws InputError if `v` is not open in `x`.
Region down_shadow(const GridComplex& x, const OpenRegion& v);

struct LowerOpenReport {
  bool lower_open = true;
  std::optional<Point> witness_point;  // in down(V), with no neighbourhood inside it
  std::vector<Box> witness_open;       // V
};

/// Decides lower-openness over the basis of open stars of cells.
LowerOpenReport is_lower_open(const GridComplex& x);
/// Checks one open region; the report's witness_open is `v` itself.
LowerOpenReport lower_open_at(const GridComplex& x, const OpenRegion& v);

struct SupClosedReport {
  bool sup_closed = true;
  std::optional<std::array<Point, 2>> witness_pair;
  std::optional<Point> witness_max;  // componentwise max, outside the space
};

SupClosedReport check_sup_closed(const GridComplex& x);

/// Points of x from which `target` is reachable along a monotone path in x.
/// Throws InputError if target lies outside x.
Region directed_reachability(const GridComplex& x, const Point& target);
/// Complement of directed_reachability: states doomed never to reach target.
Region unsafe_region(const GridComplex& x, const Point& target);

struct Dipath {
  std::vector<Point> points;
  /// One character per forbidden box: 'B' passes below its center, 'A' above,
  /// '-' never crosses its center line.
  std::string signature;
};

struct DipathClasses {
  std::vector<Dipath> representatives;
  std::string diagnostic;
};

/// One monotone staircase path per routing signature from source to target.
DipathClasses enumerate_dipath_classes(const GridComplex& x, const Point& source, const Point& target);

/// True iff the polyline is componentwise nondecreasing and every segment lies in x.
bool is_dipath_in(const GridComplex& x, const std::vector<Point>& polyline);

}  // namespace dihom::grid
