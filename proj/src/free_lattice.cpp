#include "dihom/free_lattice.hpp"

#include <algorithm>
#include <numeric>

#include "dihom/errors.hpp"

namespace dihom {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto ca = a.count();
  auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a.indices() < b.indices();
}

UpSetLattice::UpSetLattice(FinitePoset base, std::vector<ElementSet> carrier)
    : base_(std::move(base)), carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end(), canonical_less);
  if (base_.size() <= 64) {
    std::vector<Index> order(carrier_.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return carrier_[a].mask() < carrier_[b].mask(); });
    for (Index i : order) {
      keys_.push_back(carrier_[i].mask());
      key_index_.push_back(i);
    }
  }
}

std::optional<Index> UpSetLattice::find(const ElementSet& s) const {
  if (base_.size() <= 64) {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), s.mask());
    if (it != keys_.end() && *it == s.mask()) return key_index_[static_cast<std::size_t>(it - keys_.begin())];
    return std::nullopt;
  }
  for (Index i = 0; i < carrier_.size(); ++i)
    if (carrier_[i] == s) return i;
  return std::nullopt;
}

Index UpSetLattice::index_of(const ElementSet& s) const {
  auto i = find(s);
  if (!i) throw InputError("subset is not a member of the up-set lattice");
  return *i;
}

std::string UpSetLattice::member_name(Index i) const {
  std::string out = "{";
  bool first = true;
  for (Index x : carrier_[i].indices()) {
    if (!first) out += ",";
    out += base_.name(x);
    first = false;
  }
  return out + "}";
}

FinitePoset UpSetLattice::as_poset(const FreeLatticeOptions& opt) const {
  if (size() > opt.max_poset_carrier)
    throw SizeError("carrier of " + std::to_string(size()) + " members exceeds the materialization bound " +
                    std::to_string(opt.max_poset_carrier));
  std::vector<std::string> names;
  names.reserve(size());
  for (Index i = 0; i < size(); ++i) names.push_back(member_name(i));
  return FinitePoset::from_predicate(std::move(names), [this](Index i, Index j) { return leq(i, j); });
}

UpSetLattice free_lattice(const FinitePoset& p, const FreeLatticeOptions& opt) {
  const std::size_t n = p.size();
  if (n > opt.max_base)
    throw SizeError("free lattice on " + std::to_string(n) + " elements exceeds the bound of " +
                    std::to_string(opt.max_base) + " (carrier may reach 2^n members)");

  // Decide elements from the top down; a choice is legal when it agrees with
  // every already-decided element above (for inclusion) or below (exclusion).
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return p.above(a).count() < p.above(b).count(); });

  std::vector<ElementSet> out;
  ElementSet decided(n), chosen(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(chosen);
      return;
    }
    Index x = order[k];
    decided.insert(x);
    ElementSet above_decided = p.above(x) & decided;
    above_decided.erase(x);
    if (above_decided.is_subset_of(chosen)) {
      chosen.insert(x);
      self(self, k + 1);
      chosen.erase(x);
    }
    ElementSet below_decided = p.below(x) & decided;
    below_decided.erase(x);
    if (!below_decided.intersects(chosen)) self(self, k + 1);
    decided.erase(x);
  };
  rec(rec, 0);
  return UpSetLattice(p, std::move(out));
}

ElementSet unit(const FinitePoset& p, Index x) { return p.above(x); }
ElementSet unit(const FinitePoset& p, const std::string& x) { return unit(p, p.index_of(x)); }

Index counit(const FiniteLattice& l, const ElementSet& s) {
  if (!is_up_closed(l.poset(), s)) throw InputError("counit argument is not up-closed");
  return big_meet(l, s);
}

MonotoneMap inclusion_F_FU(const FinitePoset& p, const FreeLatticeOptions& opt) {
  auto fx = free_lattice(p, opt);
  auto fux = free_lattice(order_erase(p), opt);
  std::vector<Index> values;
  values.reserve(fx.size());
  for (const auto& s : fx.carrier()) values.push_back(fux.index_of(s));
  return MonotoneMap(RawMap(fx.as_poset(opt), fux.as_poset(opt), std::move(values)));
}

bool preserves_meets(const UpSetLattice& from, const UpSetLattice& to, const RawMap& f) {
  for (Index a = 0; a < from.size(); ++a)
    for (Index b = a; b < from.size(); ++b)
      if (f(from.meet(a, b)) != to.meet(f(a), f(b))) return false;
  return true;
}

AdjunctionReport check_triangle_identities(const FinitePoset& p, const FreeLatticeOptions& opt) {
  AdjunctionReport rep;
  auto fp = free_lattice(p, opt);
  for (Index i = 0; i < fp.size(); ++i) {
    ElementSet acc = p.empty_set();
    for (Index x : fp[i].indices()) acc |= unit(p, x);
    ++rep.checked;
    if (!(acc == fp[i])) rep.violations.push_back("union of units differs from " + fp.member_name(i));
  }
  return rep;
}

AdjunctionReport check_triangle_identities(const FiniteLattice& l, const FreeLatticeOptions& opt) {
  AdjunctionReport rep;
  const auto& p = l.poset();
  for (Index y = 0; y < l.size(); ++y) {
    ++rep.checked;
    if (counit(l, unit(p, y)) != y) rep.violations.push_back("counit(unit(" + p.name(y) + ")) != " + p.name(y));
  }
  auto fl = free_lattice(p, opt);
  for (Index a = 0; a < fl.size(); ++a) {
    for (Index b = 0; b < fl.size(); ++b) {
      ++rep.checked;
      Index ca = counit(l, fl[a]);
      Index cb = counit(l, fl[b]);
      if (fl.leq(a, b) && !p.leq(ca, cb))
        rep.violations.push_back("counit not monotone on " + fl.member_name(a) + ", " + fl.member_name(b));
      if (counit(l, fl[a] | fl[b]) != l.meet(ca, cb))
        rep.violations.push_back("counit does not preserve the meet of " + fl.member_name(a) + ", " +
                                 fl.member_name(b));
    }
  }
  return rep;
}

}  // namespace dihom
