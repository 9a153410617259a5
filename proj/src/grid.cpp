#include "dihom/grid.hpp"

#include <algorithm>
#include <sstream>

#include "dihom/errors.hpp"

namespace dihom::grid {

namespace {

std::string fmt_point(const Point& p) {
  std::ostringstream os;
  os << "(" << p[0] << ", " << p[1] << ")";
  return os.str();
}

bool within(const Box& inner, const Box& outer) {
  return outer.lo[0] <= inner.lo[0] && inner.hi[0] <= outer.hi[0] && outer.lo[1] <= inner.lo[1] &&
         inner.hi[1] <= outer.hi[1];
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Box Box::closed(Point lo, Point hi) {
  if (lo[0] > hi[0] || lo[1] > hi[1]) throw InputError("box has lo > hi");
  return Box{lo, hi, {false, false}, {false, false}};
}

Box Box::open(Point lo, Point hi) {
  Box b = closed(lo, hi);
  for (int a = 0; a < 2; ++a) b.lo_open[a] = b.hi_open[a] = !b.degenerate(a);
  return b;
}

bool Box::contains(const Point& p) const noexcept {
  for (int a = 0; a < 2; ++a) {
    if (lo_open[a] ? !(p[a] > lo[a]) : !(p[a] >= lo[a])) return false;
    if (hi_open[a] ? !(p[a] < hi[a]) : !(p[a] <= hi[a])) return false;
  }
  return true;
}

bool leq(const Point& a, const Point& b) noexcept { return a[0] <= b[0] && a[1] <= b[1]; }

Point componentwise_max(const Point& a, const Point& b) noexcept {
  return {std::max(a[0], b[0]), std::max(a[1], b[1])};
}

GridComplex GridComplex::build(const Box& bounds, std::vector<Box> forbidden) {
  return build(std::vector<Box>{bounds}, std::move(forbidden));
}

GridComplex GridComplex::build(std::vector<Box> pieces, std::vector<Box> forbidden) {
  return make(std::move(pieces), std::move(forbidden), {});
}

GridComplex GridComplex::make(std::vector<Box> pieces, std::vector<Box> forbidden,
                              std::array<std::vector<double>, 2> extra) {
  if (pieces.empty()) throw InputError("complex needs at least one bounding box");
  auto d = std::make_shared<Data>();
  Box hull = Box::closed(pieces[0].lo, pieces[0].hi);
  for (auto& p : pieces) {
    p = Box::closed(p.lo, p.hi);
    for (int a = 0; a < 2; ++a) {
      hull.lo[a] = std::min(hull.lo[a], p.lo[a]);
      hull.hi[a] = std::max(hull.hi[a], p.hi[a]);
    }
  }
  for (auto& f : forbidden) {
    if (f.degenerate(0) || f.degenerate(1))
      throw InputError("forbidden box " + fmt_point(f.lo) + "-" + fmt_point(f.hi) + " has zero extent");
    if (!within(f, hull))
      throw InputError("forbidden box " + fmt_point(f.lo) + "-" + fmt_point(f.hi) + " escapes the bounds");
    f = Box::open(f.lo, f.hi);
  }
  for (int a = 0; a < 2; ++a) {
    auto& br = d->breaks[a];
    for (const auto& p : pieces) br.insert(br.end(), {p.lo[a], p.hi[a]});
    for (const auto& f : forbidden) br.insert(br.end(), {f.lo[a], f.hi[a]});
    for (double v : extra[a])
      if (v >= hull.lo[a] && v <= hull.hi[a]) br.push_back(v);
    sort_unique(br);
  }
  d->pieces = std::move(pieces);
  d->forbidden = std::move(forbidden);
  d->hull = hull;
  GridComplex g(d);
  d->inside.assign(g.cell_count(), 0);
  for (std::size_t c = 0; c < g.cell_count(); ++c) d->inside[c] = g.contains(g.cell_point(c)) ? 1 : 0;
  return g;
}

GridComplex GridComplex::refined(const std::vector<double>& xs, const std::vector<double>& ys) const {
  std::array<std::vector<double>, 2> extra{breaks(0), breaks(1)};
  extra[0].insert(extra[0].end(), xs.begin(), xs.end());
  extra[1].insert(extra[1].end(), ys.begin(), ys.end());
  return make(d_->pieces, d_->forbidden, std::move(extra));
}

bool GridComplex::contains(const Point& p) const noexcept {
  bool in = false;
  for (const auto& b : d_->pieces)
    if (b.contains(p)) {
      in = true;
      break;
    }
  if (!in) return false;
  for (const auto& f : d_->forbidden)
    if (f.contains(p)) return false;
  return true;
}

double GridComplex::atom_point(int axis, std::size_t a) const noexcept {
  const auto& br = breaks(axis);
  if (a % 2 == 0) return br[a / 2];
  return (br[a / 2] + br[a / 2 + 1]) / 2;
}

Point GridComplex::cell_point(std::size_t c) const noexcept {
  auto [ax, ay] = atoms_of(c);
  return {atom_point(0, ax), atom_point(1, ay)};
}

Box GridComplex::atom_span_box(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) const noexcept {
  Box box;
  const std::array<std::array<std::size_t, 2>, 2> span{{{a0, a1}, {b0, b1}}};
  for (int axis = 0; axis < 2; ++axis) {
    const auto& br = breaks(axis);
    std::size_t lo = span[axis][0], hi = span[axis][1];
    box.lo[axis] = br[lo / 2];
    box.lo_open[axis] = lo % 2 == 1;
    box.hi[axis] = hi % 2 == 0 ? br[hi / 2] : br[hi / 2 + 1];
    box.hi_open[axis] = hi % 2 == 1;
  }
  return box;
}

Box GridComplex::cell_box(std::size_t c) const noexcept {
  auto [ax, ay] = atoms_of(c);
  return atom_span_box(ax, ax, ay, ay);
}

std::optional<std::size_t> GridComplex::atom_of(int axis, double v) const noexcept {
  const auto& br = breaks(axis);
  if (v < br.front() || v > br.back()) return std::nullopt;
  auto it = std::lower_bound(br.begin(), br.end(), v);
  auto i = static_cast<std::size_t>(it - br.begin());
  if (*it == v) return 2 * i;
  return 2 * i - 1;
}

std::optional<std::size_t> GridComplex::cell_of(const Point& p) const noexcept {
  auto ax = atom_of(0, p[0]);
  auto ay = atom_of(1, p[1]);
  if (!ax || !ay) return std::nullopt;
  return cell(*ax, *ay);
}

std::vector<std::size_t> GridComplex::star(std::size_t c) const {
  auto [ax, ay] = atoms_of(c);
  auto neighbours = [](std::size_t a, std::size_t n) {
    std::vector<std::size_t> out{a};
    if (a % 2 == 0) {
      if (a > 0) out.push_back(a - 1);
      if (a + 1 < n) out.push_back(a + 1);
    }
    return out;
  };
  std::vector<std::size_t> out;
  for (auto bx : neighbours(ax, atoms(0)))
    for (auto by : neighbours(ay, atoms(1))) {
      auto d = cell(bx, by);
      if (in_space(d)) out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Region::Region(GridComplex complex, std::vector<std::uint8_t> cells)
    : complex_(std::move(complex)), cells_(std::move(cells)) {
  if (cells_.size() != complex_.cell_count()) throw InputError("region does not match its complex");
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (!complex_.in_space(c)) cells_[c] = 0;
}

Region Region::none(const GridComplex& complex) {
  return Region(complex, std::vector<std::uint8_t>(complex.cell_count(), 0));
}

Region Region::whole(const GridComplex& complex) {
  return Region(complex, std::vector<std::uint8_t>(complex.cell_count(), 1));
}

bool Region::contains(const Point& p) const noexcept {
  auto c = complex_.cell_of(p);
  return c && cells_[*c];
}

bool Region::empty() const noexcept { return cell_total() == 0; }

std::size_t Region::cell_total() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

Region Region::complement() const {
  std::vector<std::uint8_t> out(cells_.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = complex_.in_space(c) && !cells_[c];
  return Region(complex_, std::move(out));
}

bool Region::is_subset_of(const Region& o) const {
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (cells_[c] && !o.cells_[c]) return false;
  return true;
}

Region Region::operator|(const Region& o) const {
  auto out = cells_;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] |= o.cells_[c];
  return Region(complex_, std::move(out));
}

Region Region::operator&(const Region& o) const {
  auto out = cells_;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] &= o.cells_[c];
  return Region(complex_, std::move(out));
}

std::vector<Box> Region::boxes() const {
  const std::size_t nx = complex_.atoms(0), ny = complex_.atoms(1);
  using Runs = std::vector<std::array<std::size_t, 2>>;
  std::vector<Runs> columns(nx);
  for (std::size_t ax = 0; ax < nx; ++ax) {
    for (std::size_t ay = 0; ay < ny;) {
      if (!cells_[complex_.cell(ax, ay)]) {
        ++ay;
        continue;
      }
      std::size_t start = ay;
      while (ay < ny && cells_[complex_.cell(ax, ay)]) ++ay;
      columns[ax].push_back({start, ay - 1});
    }
  }
  std::vector<Box> out;
  for (std::size_t ax = 0; ax < nx;) {
    std::size_t end = ax;
    while (end + 1 < nx && columns[end + 1] == columns[ax]) ++end;
    for (const auto& run : columns[ax]) out.push_back(complex_.atom_span_box(ax, end, run[0], run[1]));
    ax = end + 1;
  }
  return out;
}

std::optional<Point> Region::upper_corner() const {
  std::optional<Point> out;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (!cells_[c]) continue;
    auto b = complex_.cell_box(c);
    out = out ? componentwise_max(*out, b.hi) : b.hi;
  }
  return out;
}

Region realize(const GridComplex& x, const OpenRegion& v) {
  std::vector<double> xs, ys;
  for (const auto& b : v.pieces) {
    xs.insert(xs.end(), {b.lo[0], b.hi[0]});
    ys.insert(ys.end(), {b.lo[1], b.hi[1]});
  }
  auto g = x.refined(xs, ys);
  std::vector<std::uint8_t> cells(g.cell_count(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!g.in_space(c)) continue;
    auto p = g.cell_point(c);
    for (const auto& b : v.pieces)
      if (b.contains(p)) {
        cells[c] = 1;
        break;
      }
  }
  return Region(g, std::move(cells));
}

namespace {

// First cell of r with a star cell outside r.
std::optional<std::size_t> first_non_interior(const Region& r) {
  const auto& g = r.complex();
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    if (!r.has_cell(c)) continue;
    for (auto d : g.star(c))
      if (!r.has_cell(d)) return c;
  }
  return std::nullopt;
}

}  // namespace

bool is_open(const Region& r) { return !first_non_interior(r).has_value(); }

Region down_closure(const Region& r) {
  const auto& g = r.complex();
  const std::size_t nx = g.atoms(0), ny = g.atoms(1);
  std::vector<std::uint8_t> acc(g.cell_count(), 0);
  for (std::size_t ax = nx; ax-- > 0;)
    for (std::size_t ay = ny; ay-- > 0;) {
      auto c = g.cell(ax, ay);
      std::uint8_t v = r.has_cell(c);
      if (ax + 1 < nx) v |= acc[g.cell(ax + 1, ay)];
      if (ay + 1 < ny) v |= acc[g.cell(ax, ay + 1)];
      acc[c] = v;
    }
  return Region(g, std::move(acc));
}

Region up_closure(const Region& r) {
  const auto& g = r.complex();
  const std::size_t nx = g.atoms(0), ny = g.atoms(1);
  std::vector<std::uint8_t> acc(g.cell_count(), 0);
  for (std::size_t ax = 0; ax < nx; ++ax)
    for (std::size_t ay = 0; ay < ny; ++ay) {
      auto c = g.cell(ax, ay);
      std::uint8_t v = r.has_cell(c);
      if (ax > 0) v |= acc[g.cell(ax - 1, ay)];
      if (ay > 0) v |= acc[g.cell(ax, ay - 1)];
      acc[c] = v;
    }
  return Region(g, std::move(acc));
}

GridComplex build_complex(const Box& bounds, std::vector<Box> forbidden) {
  return GridComplex::build(bounds, std::move(forbidden));
}

Region down_shadow(const GridComplex& x, const OpenRegion& v) {
  auto vr = realize(x, v);
  if (auto bad = first_non_interior(vr))
    throw InputError("region is not open in the space at " + fmt_point(vr.complex().cell_point(*bad)));
  return down_closure(vr);
}

LowerOpenReport lower_open_at(const GridComplex& x, const OpenRegion& v) {
  auto shadow = down_shadow(x, v);
  LowerOpenReport rep;
  if (auto bad = first_non_interior(shadow)) {
    rep.lower_open = false;
    rep.witness_point = shadow.complex().cell_point(*bad);
    rep.witness_open = v.pieces;
  }
  return rep;
}

LowerOpenReport is_lower_open(const GridComplex& x) {
  for (std::size_t c = 0; c < x.cell_count(); ++c) {
    if (!x.in_space(c)) continue;
    std::vector<std::uint8_t> cells(x.cell_count(), 0);
    for (auto d : x.star(c)) cells[d] = 1;
    Region v(x, std::move(cells));
    auto shadow = down_closure(v);
    if (auto bad = first_non_interior(shadow)) {
      LowerOpenReport rep;
      rep.lower_open = false;
      rep.witness_point = x.cell_point(*bad);
      rep.witness_open = v.boxes();
      return rep;
    }
  }
  return {};
}

SupClosedReport check_sup_closed(const GridComplex& x) {
  const std::size_t n = x.cell_count();
  for (std::size_t c = 0; c < n; ++c) {
    if (!x.in_space(c)) continue;
    auto [cx, cy] = x.atoms_of(c);
    for (std::size_t d = c + 1; d < n; ++d) {
      if (!x.in_space(d)) continue;
      auto [dx, dy] = x.atoms_of(d);
      auto m = x.cell(std::max(cx, dx), std::max(cy, dy));
      if (!x.in_space(m)) {
        SupClosedReport rep;
        rep.sup_closed = false;
        auto p = x.cell_point(c), q = x.cell_point(d);
        rep.witness_pair = std::array<Point, 2>{p, q};
        rep.witness_max = componentwise_max(p, q);
        return rep;
      }
    }
  }
  return {};
}

Region directed_reachability(const GridComplex& x, const Point& target) {
  if (!x.contains(target)) throw InputError("target " + fmt_point(target) + " lies outside the space");
  auto g = x.refined({target[0]}, {target[1]});
  const std::size_t nx = g.atoms(0), ny = g.atoms(1);
  const std::size_t t = *g.cell_of(target);
  std::vector<std::uint8_t> reach(g.cell_count(), 0);
  for (std::size_t ax = nx; ax-- > 0;)
    for (std::size_t ay = ny; ay-- > 0;) {
      auto c = g.cell(ax, ay);
      if (!g.in_space(c)) continue;
      if (c == t) {
        reach[c] = 1;
        continue;
      }
      auto ok = [&](std::size_t bx, std::size_t by) { return bx < nx && by < ny && reach[g.cell(bx, by)]; };
      bool r = ok(ax + 1, ay) || ok(ax, ay + 1);
      // a diagonal move stays inside one open square when both atoms leave or both arrive together
      if (!r && ax % 2 == ay % 2) r = ok(ax + 1, ay + 1);
      reach[c] = r;
    }
  return Region(g, std::move(reach));
}

Region unsafe_region(const GridComplex& x, const Point& target) {
  return directed_reachability(x, target).complement();
}

bool is_dipath_in(const GridComplex& x, const std::vector<Point>& polyline) {
  if (polyline.empty()) return false;
  if (!x.contains(polyline.front())) return false;
  std::vector<double> xs, ys;
  for (const auto& p : polyline) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  auto g = x.refined(xs, ys);
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const auto& a = polyline[i];
    const auto& b = polyline[i + 1];
    if (!leq(a, b)) return false;
    if (!g.contains(b)) return false;
    // The open segment crosses cells of g; it meets each cell it enters, and
    // cells are homogeneous, so testing it at every breakpoint crossing and
    // midway between consecutive crossings is exact.
    struct Crossing {
      double t;
      int axis;  // -1 for the endpoints
      double value;
    };
    std::vector<Crossing> ts{{0.0, -1, 0.0}, {1.0, -1, 0.0}};
    for (int axis = 0; axis < 2; ++axis) {
      double span = b[axis] - a[axis];
      if (span <= 0) continue;
      for (double v : g.breaks(axis))
        if (v > a[axis] && v < b[axis]) ts.push_back({(v - a[axis]) / span, axis, v});
    }
    std::sort(ts.begin(), ts.end(), [](const Crossing& l, const Crossing& r) { return l.t < r.t; });
    auto at = [&](double t) { return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])}; };
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      Point p = at(ts[k].t);
      if (ts[k].axis >= 0) p[ts[k].axis] = ts[k].value;
      if (!x.contains(p)) return false;
      if (ts[k + 1].t > ts[k].t && !x.contains(at((ts[k].t + ts[k + 1].t) / 2))) return false;
    }
  }
  return true;
}

}  // namespace dihom::grid
