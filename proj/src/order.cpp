#include "dihom/order.hpp"

#include <set>
#include <sstream>

#include "dihom/errors.hpp"

namespace dihom {

FinitePoset::FinitePoset() : d_(std::make_shared<const Data>()) {}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names, const std::vector<IndexPair>& leq,
                                    Kind kind) {
  auto d = std::make_shared<Data>();
  const std::size_t n = names.size();
  for (Index i = 0; i < n; ++i) {
    if (!d->by_name.emplace(names[i], i).second)
      throw InputError("duplicate element name '" + names[i] + "'");
  }
  d->names = std::move(names);
  d->up.assign(n, ElementSet(n));
  d->down.assign(n, ElementSet(n));
  for (Index i = 0; i < n; ++i) {
    d->up[i].insert(i);
    d->down[i].insert(i);
  }
  for (auto [i, j] : leq) {
    if (i >= n || j >= n) throw InputError("relation pair refers to an element index out of range");
    d->up[i].insert(j);
    d->down[j].insert(i);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j : d->up[i].indices()) {
      if (!d->up[j].is_subset_of(d->up[i])) {
        Index k = 0;
        while (!d->up[j].contains(k) || d->up[i].contains(k)) ++k;
        throw InputError("relation is not transitive: " + d->names[i] + " <= " + d->names[j] +
                         " <= " + d->names[k] + " but not " + d->names[i] + " <= " + d->names[k]);
      }
      if (j != i && d->up[j].contains(i)) {
        d->antisymmetric = false;
        if (kind == Kind::poset)
          throw InputError("relation is not antisymmetric: " + d->names[i] + " and " + d->names[j]);
      }
    }
  }
  return FinitePoset(std::move(d));
}

FinitePoset FinitePoset::from_named_pairs(std::vector<std::string> names,
                                          const std::vector<std::pair<std::string, std::string>>& leq,
                                          Kind kind) {
  std::map<std::string, Index> idx;
  for (Index i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<IndexPair> pairs;
  pairs.reserve(leq.size());
  for (const auto& [a, b] : leq) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw InputError("unknown element '" + a + "'");
    if (ib == idx.end()) throw InputError("unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_pairs(std::move(names), pairs, kind);
}

Index FinitePoset::index_of(const std::string& name) const {
  auto it = d_->by_name.find(name);
  if (it == d_->by_name.end()) throw InputError("unknown element '" + name + "'");
  return it->second;
}

ElementSet FinitePoset::subset(const std::vector<std::string>& names) const {
  ElementSet s(size());
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::string> FinitePoset::names_of(const ElementSet& s) const {
  std::vector<std::string> out;
  for (Index i : s.indices()) out.push_back(name(i));
  return out;
}

std::vector<IndexPair> FinitePoset::relation() const {
  std::vector<IndexPair> out;
  for (Index i = 0; i < size(); ++i)
    for (Index j : above(i).indices()) out.emplace_back(i, j);
  return out;
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->names == b.d_->names && a.d_->up == b.d_->up;
}

ElementSet up_set(const FinitePoset& p, const ElementSet& a) {
  ElementSet out(p.size());
  for (Index i : a.indices()) out |= p.above(i);
  return out;
}

ElementSet down_set(const FinitePoset& p, const ElementSet& a) {
  ElementSet out(p.size());
  for (Index i : a.indices()) out |= p.below(i);
  return out;
}

ElementSet up_set(const FinitePoset& p, const std::vector<std::string>& a) {
  return up_set(p, p.subset(a));
}

ElementSet down_set(const FinitePoset& p, const std::vector<std::string>& a) {
  return down_set(p, p.subset(a));
}

bool is_up_closed(const FinitePoset& p, const ElementSet& a) { return up_set(p, a) == a; }
bool is_down_closed(const FinitePoset& p, const ElementSet& a) { return down_set(p, a) == a; }

FinitePoset order_erase(const FinitePoset& p) { return FinitePoset::from_pairs(p.names(), {}); }

FinitePoset order_dual(const FinitePoset& p) {
  std::vector<IndexPair> rev;
  for (auto [i, j] : p.relation()) rev.emplace_back(j, i);
  return FinitePoset::from_pairs(p.names(), rev,
                                 p.antisymmetric() ? FinitePoset::Kind::poset : FinitePoset::Kind::preorder);
}

RawMap::RawMap(FinitePoset source, FinitePoset target, std::vector<Index> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_.size())
    throw InputError("map is not total: " + std::to_string(values_.size()) + " values for " +
                     std::to_string(source_.size()) + " source elements");
  for (Index v : values_)
    if (v >= target_.size()) throw InputError("map value out of range of the target");
}

RawMap RawMap::identity(const FinitePoset& p) {
  std::vector<Index> v(p.size());
  for (Index i = 0; i < v.size(); ++i) v[i] = i;
  return RawMap(p, p, std::move(v));
}

RawMap RawMap::constant(const FinitePoset& source, const FinitePoset& target, Index value) {
  return RawMap(source, target, std::vector<Index>(source.size(), value));
}

MonotonicityReport is_monotone(const RawMap& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (Index x = 0; x < s.size(); ++x)
    for (Index y : s.above(x).indices())
      if (!t.leq(f(x), f(y))) return {false, IndexPair{x, y}};
  return {};
}

MonotoneMap::MonotoneMap(RawMap f) : f_(std::move(f)) {
  auto r = is_monotone(f_);
  if (!r.ok) {
    auto [x, y] = *r.witness;
    throw PreconditionError("map is not monotone: " + f_.source().name(x) + " <= " +
                            f_.source().name(y) + " but " + f_.target().name(f_(x)) + " is not <= " +
                            f_.target().name(f_(y)));
  }
}

struct LatticeBuilder {
  static FiniteLattice make(FinitePoset p, std::vector<Index> meet, std::vector<Index> join, Index bottom,
                            Index top) {
    return FiniteLattice(std::move(p), std::move(meet), std::move(join), bottom, top);
  }
};

namespace {

// Greatest element of `bounds` w.r.t. `below`-rows, if any.
std::optional<Index> greatest(const FinitePoset& p, const ElementSet& bounds) {
  for (Index g : bounds.indices())
    if (bounds.is_subset_of(p.below(g))) return g;
  return std::nullopt;
}

std::optional<Index> least(const FinitePoset& p, const ElementSet& bounds) {
  for (Index g : bounds.indices())
    if (bounds.is_subset_of(p.above(g))) return g;
  return std::nullopt;
}

}  // namespace

LatticeResult as_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) return LatticeFailure{std::nullopt, "empty poset has no top or bottom"};
  if (!p.antisymmetric()) return LatticeFailure{std::nullopt, "preorder is not antisymmetric"};
  std::vector<Index> meet(n * n), join(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      auto glb = greatest(p, p.below(a) & p.below(b));
      if (!glb) return LatticeFailure{IndexPair{a, b}, "no greatest lower bound"};
      auto lub = least(p, p.above(a) & p.above(b));
      if (!lub) return LatticeFailure{IndexPair{a, b}, "no least upper bound"};
      meet[a * n + b] = meet[b * n + a] = *glb;
      join[a * n + b] = join[b * n + a] = *lub;
    }
  }
  auto bottom = least(p, p.all());
  auto top = greatest(p, p.all());
  return LatticeBuilder::make(p, std::move(meet), std::move(join), *bottom, *top);
}

FiniteLattice require_lattice(const FinitePoset& p) {
  auto r = as_lattice(p);
  if (auto* f = std::get_if<LatticeFailure>(&r)) {
    std::string detail = "not a lattice: " + f->reason;
    if (f->witness) detail += " for pair (" + p.name(f->witness->first) + ", " + p.name(f->witness->second) + ")";
    throw InputError(detail);
  }
  return std::get<FiniteLattice>(std::move(r));
}

Index big_meet(const FiniteLattice& l, const ElementSet& s) {
  Index acc = l.top();
  for (Index i : s.indices()) acc = l.meet(acc, i);
  return acc;
}

Index big_join(const FiniteLattice& l, const ElementSet& s) {
  Index acc = l.bottom();
  for (Index i : s.indices()) acc = l.join(acc, i);
  return acc;
}

FiniteLattice lattice_dual(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<Index> meet(n * n), join(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      meet[a * n + b] = l.join(a, b);
      join[a * n + b] = l.meet(a, b);
    }
  return LatticeBuilder::make(order_dual(l.poset()), std::move(meet), std::move(join), l.top(), l.bottom());
}

namespace standard {

FinitePoset chain(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return FinitePoset::from_predicate(std::move(names), [](Index i, Index j) { return i <= j; });
}

FinitePoset antichain(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return FinitePoset::from_pairs(std::move(names), {});
}

FinitePoset diamond() {
  return FinitePoset::from_named_pairs({"bot", "a", "b", "top"}, {{"bot", "a"},
                                                                  {"bot", "b"},
                                                                  {"bot", "top"},
                                                                  {"a", "top"},
                                                                  {"b", "top"}});
}

FinitePoset pentagon() {
  return FinitePoset::from_named_pairs({"bot", "a", "b", "c", "top"},
                                       {{"bot", "a"},
                                        {"bot", "b"},
                                        {"bot", "c"},
                                        {"bot", "top"},
                                        {"a", "c"},
                                        {"a", "top"},
                                        {"c", "top"},
                                        {"b", "top"}});
}

FinitePoset m3() {
  return FinitePoset::from_named_pairs({"bot", "a", "b", "c", "top"}, {{"bot", "a"},
                                                                       {"bot", "b"},
                                                                       {"bot", "c"},
                                                                       {"bot", "top"},
                                                                       {"a", "top"},
                                                                       {"b", "top"},
                                                                       {"c", "top"}});
}

FinitePoset chain_product(const std::vector<std::size_t>& lengths) {
  std::vector<std::vector<std::size_t>> coords{{}};
  for (std::size_t len : lengths) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : coords)
      for (std::size_t v = 0; v < len; ++v) {
        auto d = c;
        d.push_back(v);
        next.push_back(std::move(d));
      }
    coords = std::move(next);
  }
  std::vector<std::string> names;
  for (const auto& c : coords) {
    std::ostringstream os;
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    names.push_back(os.str());
  }
  return FinitePoset::from_predicate(std::move(names), [&](Index i, Index j) {
    for (std::size_t k = 0; k < lengths.size(); ++k)
      if (coords[i][k] > coords[j][k]) return false;
    return true;
  });
}

}  // namespace standard

}  // namespace dihom
