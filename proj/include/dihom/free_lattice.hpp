#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihom/order.hpp"

namespace dihom {

struct FreeLatticeOptions {
  /// Largest base poset accepted; the carrier may reach 2^max_base members.
  std::size_t max_base = 16;
  /// Largest carrier that may be materialized as an explicit FinitePoset
  /// (the relation is quadratic in the carrier size).
  std::size_t max_poset_carrier = 4096;
};

/// All up-closed subsets of a finite poset, ordered by reverse inclusion.
///
/// Meet is union, join is intersection, top is the empty set and bottom the
/// full set. The carrier is sorted by cardinality, then lexicographically by
/// sorted member indices, so serialization is deterministic.
class UpSetLattice {
 public:
  UpSetLattice(FinitePoset base, std::vector<ElementSet> carrier);

  const FinitePoset& base() const noexcept { return base_; }
  const std::vector<ElementSet>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const ElementSet& operator[](Index i) const { return carrier_[i]; }

  std::optional<Index> find(const ElementSet& s) const;
  Index index_of(const ElementSet& s) const;  // throws InputError

  bool leq(Index i, Index j) const { return carrier_[j].is_subset_of(carrier_[i]); }
  Index meet(Index i, Index j) const { return index_of(carrier_[i] | carrier_[j]); }
  Index join(Index i, Index j) const { return index_of(carrier_[i] & carrier_[j]); }
  Index top() const { return 0; }
  Index bottom() const { return carrier_.size() - 1; }

  /// Display name of a member, e.g. "{a,top}".
  std::string member_name(Index i) const;
  /// The carrier as an explicit poset with member names.
  FinitePoset as_poset(const FreeLatticeOptions& opt = {}) const;

 private:
  FinitePoset base_;
  std::vector<ElementSet> carrier_;
  std::vector<std::uint64_t> keys_;  // sorted masks for lookup when base <= 64
  std::vector<Index> key_index_;
};

/// Canonical order of up-set carriers: cardinality, then sorted member indices.
bool canonical_less(const ElementSet& a, const ElementSet& b);

/// Enumerates every up-closed subset of `p`. Throws SizeError past `opt.max_base`.
UpSetLattice free_lattice(const FinitePoset& p, const FreeLatticeOptions& opt = {});

/// The unit x -> up-set generated by x.
ElementSet unit(const FinitePoset& p, Index x);
ElementSet unit(const FinitePoset& p, const std::string& x);

/// The counit: meet of an up-closed subset of a lattice. Throws InputError if
/// `s` is not up-closed.
Index counit(const FiniteLattice& l, const ElementSet& s);

/// The inclusion of F(P) into F(order_erase(P)) as a map of explicit posets.
MonotoneMap inclusion_F_FU(const FinitePoset& p, const FreeLatticeOptions& opt = {});

/// True iff `f` between two materialized up-set lattices sends unions to unions.
bool preserves_meets(const UpSetLattice& from, const UpSetLattice& to, const RawMap& f);

struct AdjunctionReport {
  std::vector<std::string> violations;
  std::size_t checked = 0;
  bool ok() const noexcept { return violations.empty(); }
};

/// Every up-set S of p equals the union of the units of its members.
AdjunctionReport check_triangle_identities(const FinitePoset& p, const FreeLatticeOptions& opt = {});
/// counit(unit(y)) == y for every y, plus monotonicity and meet preservation
/// of the counit on F(L).
AdjunctionReport check_triangle_identities(const FiniteLattice& l, const FreeLatticeOptions& opt = {});

}  // namespace dihom
