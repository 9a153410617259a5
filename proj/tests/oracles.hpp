// Brute-force reference implementations and generators shared by the unit
// tests and the acceptance runner. Nothing here calls the algorithm it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dihom/free_lattice.hpp"
#include "dihom/future.hpp"
#include "dihom/grid.hpp"
#include "dihom/monotonize.hpp"
#include "dihom/order.hpp"

namespace oracle {

using dihom::ElementSet;
using dihom::FiniteLattice;
using dihom::FinitePoset;
using dihom::GridFunction;
using dihom::Index;
using dihom::RawMap;
namespace grid = dihom::grid;

// ---------------------------------------------------------------- generators

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng); }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }
  bool coin(double p = 0.5) { return unit() < p; }
  std::mt19937_64 eng;
};

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

/// Every partial order on {0..n-1} (labelled), by assigning each unordered
/// pair one of {incomparable, i<j, j<i} and keeping transitive assignments.
inline std::vector<FinitePoset> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  std::vector<FinitePoset> out;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rel[i][j] = i == j;
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      auto s = c % 3;
      c /= 3;
      if (s == 1) rel[i][j] = true;
      if (s == 2) rel[j][i] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (rel[a][b])
          for (std::size_t d = 0; d < n; ++d)
            if (rel[b][d] && !rel[a][d]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    std::vector<dihom::IndexPair> leq;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rel[a][b]) leq.emplace_back(a, b);
    out.push_back(FinitePoset::from_pairs(names(n), leq));
  }
  return out;
}

inline std::vector<FinitePoset> all_posets_up_to(std::size_t n) {
  std::vector<FinitePoset> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& p : all_posets(k)) out.push_back(std::move(p));
  return out;
}

/// The lattice targets used throughout: 2-chain, 3-chain, diamond, N5, M3.
inline std::vector<std::pair<std::string, FiniteLattice>> test_lattices() {
  using namespace dihom::standard;
  return {{"2-chain", dihom::require_lattice(chain(2))},
          {"3-chain", dihom::require_lattice(chain(3))},
          {"diamond", dihom::require_lattice(diamond())},
          {"pentagon", dihom::require_lattice(pentagon())},
          {"m3", dihom::require_lattice(m3())}};
}

/// Calls `fn` with every function source -> target (as a value vector).
inline void for_each_function(std::size_t n_source, std::size_t n_target,
                              const std::function<void(const std::vector<Index>&)>& fn) {
  std::vector<Index> v(n_source, 0);
  while (true) {
    fn(v);
    std::size_t k = 0;
    while (k < n_source && ++v[k] == n_target) v[k++] = 0;
    if (k == n_source) return;
  }
}

// ------------------------------------------------------------ order oracles

/// Greatest lower bound of `s` by scanning all elements; nullopt if none.
inline std::optional<Index> glb(const FinitePoset& p, const std::vector<Index>& s) {
  std::vector<Index> lower;
  for (Index x = 0; x < p.size(); ++x)
    if (std::all_of(s.begin(), s.end(), [&](Index y) { return p.leq(x, y); })) lower.push_back(x);
  for (Index x : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Index y) { return p.leq(y, x); })) return x;
  return std::nullopt;
}

inline std::optional<Index> lub(const FinitePoset& p, const std::vector<Index>& s) {
  std::vector<Index> upper;
  for (Index x = 0; x < p.size(); ++x)
    if (std::all_of(s.begin(), s.end(), [&](Index y) { return p.leq(y, x); })) upper.push_back(x);
  for (Index x : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Index y) { return p.leq(x, y); })) return x;
  return std::nullopt;
}

inline bool is_lattice(const FinitePoset& p) {
  if (p.size() == 0) return false;
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < p.size(); ++b)
      if (!glb(p, {a, b}) || !lub(p, {a, b})) return false;
  return true;
}

inline bool up_closed(const FinitePoset& p, std::uint64_t mask) {
  for (Index a = 0; a < p.size(); ++a)
    if (mask >> a & 1U)
      for (Index b = 0; b < p.size(); ++b)
        if (p.leq(a, b) && !(mask >> b & 1U)) return false;
  return true;
}

/// Number of up-closed subsets, by filtering all 2^n subsets.
inline std::size_t count_up_sets(const FinitePoset& p) {
  std::size_t n = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) n += up_closed(p, m);
  return n;
}

/// x -> glb of f over the up-set of x.
inline std::vector<Index> retract_finite(const FinitePoset& source, const FiniteLattice& l,
                                         const std::vector<Index>& f) {
  std::vector<Index> g(source.size());
  for (Index x = 0; x < source.size(); ++x) {
    std::vector<Index> vals;
    for (Index y = 0; y < source.size(); ++y)
      if (source.leq(x, y)) vals.push_back(f[y]);
    g[x] = *glb(l.poset(), vals);
  }
  return g;
}

inline bool monotone_values(const FinitePoset& source, const FinitePoset& target, const std::vector<Index>& f) {
  for (Index x = 0; x < source.size(); ++x)
    for (Index y = 0; y < source.size(); ++y)
      if (source.leq(x, y) && !target.leq(f[x], f[y])) return false;
  return true;
}

// ------------------------------------------------------------- grid oracles

/// Componentwise min of f over all vertices (i', j') >= (i, j), by direct scan.
inline GridFunction retract_grid(const GridFunction& f) {
  GridFunction g = f;
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j) {
      if (f.absent(i, j)) continue;
      for (std::size_t c = 0; c < f.dim_out(); ++c) {
        double m = f.at(i, j)(c);
        for (std::size_t a = i; a < f.nx(); ++a)
          for (std::size_t b = j; b < f.ny(); ++b)
            if (!f.absent(a, b)) m = std::min(m, f.at(a, b)(c));
        g.at(i, j)(c) = m;
      }
    }
  return g;
}

inline bool vertex_monotone(const GridFunction& f) {
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j)
      for (std::size_t a = i; a < f.nx(); ++a)
        for (std::size_t b = j; b < f.ny(); ++b) {
          if (f.absent(i, j) || f.absent(a, b)) continue;
          if ((f.at(i, j) > f.at(a, b)).any()) return false;
        }
  return true;
}

/// The vertex grid as a finite poset, vertex (i, j) named "i,j".
inline FinitePoset vertex_poset(std::size_t nx, std::size_t ny) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) n.push_back(std::to_string(i) + "," + std::to_string(j));
  return FinitePoset::from_predicate(n, [&](Index a, Index b) {
    return a / ny <= b / ny && a % ny <= b % ny;
  });
}

/// Meet of frames over the time samples selected by `keep`, per vertex and
/// component: the brute-force reference for the j/k sweeps.
inline GridFunction subset_meet(const dihom::TimedHomotopy& h, const std::function<bool(double)>& keep,
                                bool use_max = false) {
  GridFunction out = h.frames().front();
  bool first = true;
  for (std::size_t s = 0; s < h.size(); ++s) {
    if (!keep(h.times()[s])) continue;
    if (first) {
      out = h.frames()[s];
      first = false;
    } else {
      if (use_max)
        out.values() = out.values().max(h.frames()[s].values());
      else
        out.values() = out.values().min(h.frames()[s].values());
    }
  }
  return out;
}

/// Sample lattice of a scene: points lo + k*step, indexed [i][j].
struct Sampling {
  grid::Point lo;
  double step;
  std::size_t nx, ny;
  grid::Point at(std::size_t i, std::size_t j) const {
    return {lo[0] + static_cast<double>(i) * step, lo[1] + static_cast<double>(j) * step};
  }
  std::size_t id(std::size_t i, std::size_t j) const { return i * ny + j; }
};

inline Sampling sampling(const grid::GridComplex& x, double step) {
  const auto& h = x.hull();
  return {h.lo, step, static_cast<std::size_t>(std::llround((h.hi[0] - h.lo[0]) / step)) + 1,
          static_cast<std::size_t>(std::llround((h.hi[1] - h.lo[1]) / step)) + 1};
}

inline grid::Point mid(const grid::Point& a, const grid::Point& b) { return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; }

/// Monotone BFS backwards from `target` on the sample lattice: a sample
/// reaches the target if a right, up, or diagonal step to a reaching sample
/// stays in X (endpoints and midpoint tested). Exact when every breakpoint
/// of the scene lies on the lattice.
inline std::vector<std::uint8_t> monotone_bfs(const grid::GridComplex& x, const Sampling& s, std::size_t ti,
                                              std::size_t tj) {
  std::vector<std::uint8_t> reach(s.nx * s.ny, 0);
  if (!x.contains(s.at(ti, tj))) return reach;
  reach[s.id(ti, tj)] = 1;
  for (std::size_t ii = ti + 1; ii-- > 0;)
    for (std::size_t jj = tj + 1; jj-- > 0;) {
      if (reach[s.id(ii, jj)] || !x.contains(s.at(ii, jj))) continue;
      const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
      for (const auto& d : steps) {
        std::size_t a = ii + d[0], b = jj + d[1];
        if (a > ti || b > tj || !reach[s.id(a, b)]) continue;
        if (x.contains(mid(s.at(ii, jj), s.at(a, b)))) {
          reach[s.id(ii, jj)] = 1;
          break;
        }
      }
    }
  return reach;
}

/// Down-set of V ∩ X on the sample lattice (suffix OR of V-samples).
/// Exact on samples when every breakpoint of X and every face of V lies on
/// the lattice: any v in V ∩ X above a sample can be rounded per coordinate
/// to a sample still in V ∩ X and still above it.
inline std::vector<std::uint8_t> sampled_down(const grid::GridComplex& x, const Sampling& s,
                                              const std::function<bool(const grid::Point&)>& in_v) {
  std::vector<std::uint8_t> d(s.nx * s.ny, 0);
  for (std::size_t i = s.nx; i-- > 0;)
    for (std::size_t j = s.ny; j-- > 0;) {
      auto p = s.at(i, j);
      bool v = x.contains(p) && in_v(p);
      if (i + 1 < s.nx) v = v || d[s.id(i + 1, j)];
      if (j + 1 < s.ny) v = v || d[s.id(i, j + 1)];
      d[s.id(i, j)] = v;
    }
  for (std::size_t i = 0; i < s.nx; ++i)
    for (std::size_t j = 0; j < s.ny; ++j)
      if (!x.contains(s.at(i, j))) d[s.id(i, j)] = 0;
  return d;
}

inline bool in_boxes(const std::vector<grid::Box>& v, const grid::Point& p) {
  return std::any_of(v.begin(), v.end(), [&](const grid::Box& b) { return b.contains(p); });
}

/// Non-openness of ↓V at sample (i, j): (i, j) lies in ↓V and some
/// neighbouring sample lies in X but not in ↓V. Sound when the scene and V
/// live on the lattice of step 2 * s.step: the neighbour then represents an
/// entire open cell touching the point.
inline bool down_not_open_at(const grid::GridComplex& x, const Sampling& s, const std::vector<std::uint8_t>& down,
                             std::size_t i, std::size_t j) {
  if (!down[s.id(i, j)]) return false;
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj) {
      if (!di && !dj) continue;
      auto a = static_cast<long>(i) + di, b = static_cast<long>(j) + dj;
      if (a < 0 || b < 0 || a >= static_cast<long>(s.nx) || b >= static_cast<long>(s.ny)) continue;
      auto q = s.id(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (x.contains(s.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) && !down[q]) return true;
    }
  return false;
}

/// ε-sampling lower-openness search. Opens are the Chebyshev balls of radius
/// eps/2 around every point of the eps/2 lattice; ↓V is sampled at eps/4.
/// Returns a point where some ↓V fails to be open, or nullopt. Requires all
/// breakpoints of `x` on the eps lattice (relative to the hull corner).
struct LowerOpenCounterexample {
  grid::Point point;
  grid::Point center;  // of the ball V
};

inline std::optional<LowerOpenCounterexample> lower_open_search(const grid::GridComplex& x, double eps) {
  auto fine = sampling(x, eps / 4);
  auto coarse = sampling(x, eps / 2);
  for (std::size_t ci = 0; ci < coarse.nx; ++ci)
    for (std::size_t cj = 0; cj < coarse.ny; ++cj) {
      auto c = coarse.at(ci, cj);
      auto in_v = [&](const grid::Point& p) {
        return std::abs(p[0] - c[0]) < eps / 2 - 1e-12 && std::abs(p[1] - c[1]) < eps / 2 - 1e-12;
      };
      auto down = sampled_down(x, fine, in_v);
      for (std::size_t i = 0; i < fine.nx; i += 2)
        for (std::size_t j = 0; j < fine.ny; j += 2)
          if (down_not_open_at(x, fine, down, i, j)) return LowerOpenCounterexample{fine.at(i, j), c};
    }
  return std::nullopt;
}

/// Confirms a reported lower-open failure: p lies in ↓V and ↓V is not open
/// at p, with ↓V sampled at step `h` (V and the scene on the 2h lattice).
inline bool confirms_not_lower_open(const grid::GridComplex& x, const std::vector<grid::Box>& v, const grid::Point& p,
                                    double h) {
  auto s = sampling(x, h);
  auto down = sampled_down(x, s, [&](const grid::Point& q) { return in_boxes(v, q); });
  auto i = static_cast<std::size_t>(std::llround((p[0] - s.lo[0]) / h));
  auto j = static_cast<std::size_t>(std::llround((p[1] - s.lo[1]) / h));
  if (std::abs(s.at(i, j)[0] - p[0]) > 1e-9 || std::abs(s.at(i, j)[1] - p[1]) > 1e-9) return false;
  return down_not_open_at(x, s, down, i, j);
}

/// Counts dihomotopy classes of lattice staircase paths from sample `from`
/// to sample `to`: all right/up paths whose edges lie in X, identified under
/// square moves across unit squares whose interior lies in X.
inline std::size_t staircase_classes(const grid::GridComplex& x, const Sampling& s, std::array<std::size_t, 2> from,
                                     std::array<std::size_t, 2> to) {
  const std::size_t dx = to[0] - from[0], dy = to[1] - from[1], len = dx + dy;
  auto pt = [&](std::size_t i, std::size_t j) { return s.at(from[0] + i, from[1] + j); };
  auto edge_ok = [&](std::size_t i, std::size_t j, bool right) {
    auto a = pt(i, j), b = right ? pt(i + 1, j) : pt(i, j + 1);
    return x.contains(a) && x.contains(b) && x.contains(mid(a, b));
  };
  // Paths as bit strings (bit k set = step k goes right).
  std::vector<std::uint32_t> paths;
  std::function<void(std::size_t, std::size_t, std::uint32_t)> walk = [&](std::size_t i, std::size_t j,
                                                                        std::uint32_t bits) {
    if (i == dx && j == dy) {
      paths.push_back(bits);
      return;
    }
    std::size_t k = i + j;
    if (i < dx && edge_ok(i, j, true)) walk(i + 1, j, bits | (1U << k));
    if (j < dy && edge_ok(i, j, false)) walk(i, j + 1, bits);
  };
  walk(0, 0, 0);
  std::map<std::uint32_t, std::size_t> id;
  for (std::size_t k = 0; k < paths.size(); ++k) id[paths[k]] = k;
  std::vector<std::size_t> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t k = 0; k < paths.size(); ++k) {
    auto bits = paths[k];
    std::size_t i = 0, j = 0;
    for (std::size_t step = 0; step + 1 < len; ++step) {
      bool r0 = bits >> step & 1U, r1 = bits >> (step + 1) & 1U;
      if (r0 && !r1) {
        // right then up at (i, j): swap to up then right across square (i, j).
        if (x.contains(mid(pt(i, j), pt(i + 1, j + 1)))) {
          auto other = (bits & ~(1U << step)) | (1U << (step + 1));
          if (auto it = id.find(other); it != id.end()) parent[find(k)] = find(it->second);
        }
      }
      if (r0) ++i;
      else ++j;
    }
  }
  std::size_t classes = 0;
  for (std::size_t k = 0; k < paths.size(); ++k) classes += find(k) == k;
  return classes;
}

// ------------------------------------------------------------- random scenes

/// Random scene on the integer lattice [0, n]^2 with up to `max_boxes` open
/// forbidden boxes; with probability `multi` the bounds are a union of boxes
/// (possibly degenerate segments).
inline grid::GridComplex random_scene(Rng& r, int n, int max_boxes, double multi = 0.0) {
  auto pick_box = [&](bool allow_degenerate) {
    int x0 = r.between(0, n - 1), y0 = r.between(0, n - 1);
    int x1 = r.between(allow_degenerate ? x0 : x0 + 1, n), y1 = r.between(allow_degenerate ? y0 : y0 + 1, n);
    return std::array<int, 4>{x0, y0, x1, y1};
  };
  std::vector<grid::Box> pieces;
  if (r.coin(multi)) {
    pieces.push_back(grid::Box::closed({0, 0}, {static_cast<double>(r.between(1, n)), static_cast<double>(r.between(1, n))}));
    int extra = r.between(1, 3);
    for (int k = 0; k < extra; ++k) {
      auto b = pick_box(true);
      pieces.push_back(grid::Box::closed({double(b[0]), double(b[1])}, {double(b[2]), double(b[3])}));
    }
  } else {
    pieces.push_back(grid::Box::closed({0, 0}, {double(n), double(n)}));
  }
  double hx0 = 1e9, hy0 = 1e9, hx1 = -1e9, hy1 = -1e9;
  for (const auto& p : pieces) {
    hx0 = std::min(hx0, p.lo[0]);
    hy0 = std::min(hy0, p.lo[1]);
    hx1 = std::max(hx1, p.hi[0]);
    hy1 = std::max(hy1, p.hi[1]);
  }
  std::vector<grid::Box> forbidden;
  int boxes = r.between(0, max_boxes);
  for (int k = 0; k < boxes; ++k) {
    auto b = pick_box(false);
    grid::Box f = grid::Box::open({double(b[0]), double(b[1])}, {double(b[2]), double(b[3])});
    if (f.lo[0] < hx0 || f.lo[1] < hy0 || f.hi[0] > hx1 || f.hi[1] > hy1) continue;
    forbidden.push_back(f);
  }
  return grid::GridComplex::build(std::move(pieces), std::move(forbidden));
}

/// Scenes that are sup-closed by construction: unions of boxes sharing the
/// top corner, diagonal chains of boxes meeting at corners, plain boxes.
inline grid::GridComplex random_sup_closed_scene(Rng& r, int n) {
  switch (r.below(3)) {
    case 0: {
      // Union of boxes sharing the top corner: an up-set of the square.
      std::vector<grid::Box> pieces;
      int k = r.between(1, 4);
      for (int m = 0; m < k; ++m)
        pieces.push_back(grid::Box::closed({double(r.between(0, n - 1)), double(r.between(0, n - 1))}, {double(n), double(n)}));
      return grid::GridComplex::build(std::move(pieces), {});
    }
    case 1: {
      // A chain of boxes along the diagonal overlapping at corners.
      std::vector<grid::Box> pieces;
      int x = 0, y = 0;
      while (x < n && y < n) {
        int w = r.between(1, 3), h = r.between(1, 3);
        pieces.push_back(grid::Box::closed({double(x), double(y)}, {double(std::min(n, x + w)), double(std::min(n, y + h))}));
        x = std::min(n, x + w);
        y = std::min(n, y + h);
      }
      return grid::GridComplex::build(std::move(pieces), {});
    }
    default: {
      int w = r.between(1, n), h = r.between(1, n);
      return grid::GridComplex::build(grid::Box::closed({0, 0}, {double(w), double(h)}), {});
    }
  }
}

}  // namespace oracle
