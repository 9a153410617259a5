#include <algorithm>
#include <map>

#include "dihom/errors.hpp"
#include "dihom/grid.hpp"

namespace dihom::grid {

namespace {

struct Parent {
  std::size_t cell;
  std::string signature;
};

}  // namespace

DipathClasses enumerate_dipath_classes(const GridComplex& x, const Point& source, const Point& target) {
  if (!x.contains(source)) throw InputError("source lies outside the space");
  if (!x.contains(target)) throw InputError("target lies outside the space");
  DipathClasses out;
  if (!leq(source, target)) {
    out.diagnostic = "source is not below target; no monotone path exists";
    return out;
  }

  const auto& boxes = x.forbidden();
  std::vector<double> xs{source[0], target[0]}, ys{source[1], target[1]};
  for (const auto& b : boxes) {
    auto c = b.center();
    xs.push_back(c[0]);
    ys.push_back(c[1]);
  }
  auto reach = directed_reachability(x.refined(xs, ys), target);
  const auto& g = reach.complex();
  const std::size_t nx = g.atoms(0), ny = g.atoms(1);

  std::vector<std::array<std::size_t, 2>> centre_atoms;
  for (const auto& b : boxes) {
    auto c = b.center();
    centre_atoms.push_back({*g.atom_of(0, c[0]), *g.atom_of(1, c[1])});
  }
  auto stamp = [&](std::size_t cell, std::string sig) {
    auto [ax, ay] = g.atoms_of(cell);
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      if (centre_atoms[k][0] != ax) continue;
      char side = ay < centre_atoms[k][1] ? 'B' : 'A';
      if (sig[k] != '-' && sig[k] != side) throw ContractError("monotone path changed sides of a forbidden box");
      sig[k] = side;
    }
    return sig;
  };

  const std::size_t s = *g.cell_of(source);
  const std::size_t t = *g.cell_of(target);
  std::vector<std::map<std::string, Parent>> states(g.cell_count());
  if (!reach.has_cell(s)) {
    out.diagnostic = "target is unreachable from source";
    return out;
  }
  states[s].emplace(stamp(s, std::string(boxes.size(), '-')), Parent{s, {}});

  // Cells in lexicographic atom order; every move increases it.
  for (std::size_t c = s; c < g.cell_count(); ++c) {
    if (states[c].empty() || c == t) continue;
    auto [ax, ay] = g.atoms_of(c);
    std::vector<std::size_t> next;
    if (ax + 1 < nx) next.push_back(g.cell(ax + 1, ay));
    if (ay + 1 < ny) next.push_back(g.cell(ax, ay + 1));
    if (ax % 2 == ay % 2 && ax + 1 < nx && ay + 1 < ny) next.push_back(g.cell(ax + 1, ay + 1));
    for (auto d : next) {
      if (!reach.has_cell(d)) continue;
      for (const auto& [sig, _] : states[c]) states[d].try_emplace(stamp(d, sig), Parent{c, sig});
    }
  }

  for (const auto& [sig, _] : states[t]) {
    std::vector<Point> pts;
    std::size_t cur = t;
    std::string cur_sig = sig;
    while (true) {
      pts.push_back(g.cell_point(cur));
      if (cur == s) break;
      const auto& p = states[cur].at(cur_sig);
      cur = p.cell;
      cur_sig = p.signature;
    }
    std::reverse(pts.begin(), pts.end());
    // drop interior points that are collinear with their neighbours
    std::vector<Point> simple;
    for (const auto& p : pts) {
      while (simple.size() >= 2) {
        const auto& a = simple[simple.size() - 2];
        const auto& b = simple.back();
        double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cross != 0) break;
        simple.pop_back();
      }
      simple.push_back(p);
    }
    out.representatives.push_back({std::move(simple), sig});
  }
  if (out.representatives.empty()) out.diagnostic = "target is unreachable from source";
  return out;
}

}  // namespace dihom::grid
