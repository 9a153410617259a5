#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dihom/element_set.hpp"

namespace dihom {

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// A finite preorder on named elements, stored as dense up/down bit rows.
///
/// Constructors validate and never repair: reflexive pairs are added, but a
/// non-transitive relation is rejected, and so is a non-antisymmetric one
/// unless `Kind::preorder` is requested. Copies share the immutable payload.
class FinitePoset {
 public:
  enum class Kind { poset, preorder };

  FinitePoset();

  static FinitePoset from_pairs(std::vector<std::string> names, const std::vector<IndexPair>& leq,
                                Kind kind = Kind::poset);
  static FinitePoset from_named_pairs(std::vector<std::string> names,
                                      const std::vector<std::pair<std::string, std::string>>& leq,
                                      Kind kind = Kind::poset);
  template <class Pred>
  static FinitePoset from_predicate(std::vector<std::string> names, Pred&& leq,
                                    Kind kind = Kind::poset) {
    std::vector<IndexPair> pairs;
    for (Index i = 0; i < names.size(); ++i)
      for (Index j = 0; j < names.size(); ++j)
        if (leq(i, j)) pairs.emplace_back(i, j);
    return from_pairs(std::move(names), pairs, kind);
  }

  std::size_t size() const noexcept { return d_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return d_->names; }
  const std::string& name(Index i) const { return d_->names.at(i); }
  Index index_of(const std::string& name) const;
  ElementSet subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const ElementSet& s) const;

  bool leq(Index i, Index j) const noexcept { return d_->up[i].contains(j); }
  bool comparable(Index i, Index j) const noexcept { return leq(i, j) || leq(j, i); }
  const ElementSet& above(Index i) const noexcept { return d_->up[i]; }
  const ElementSet& below(Index i) const noexcept { return d_->down[i]; }
  bool antisymmetric() const noexcept { return d_->antisymmetric; }

  /// All related pairs (i, j) with i <= j, reflexive pairs included.
  std::vector<IndexPair> relation() const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::map<std::string, Index> by_name;
    std::vector<ElementSet> up;
    std::vector<ElementSet> down;
    bool antisymmetric = true;
  };
  explicit FinitePoset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

ElementSet up_set(const FinitePoset& p, const ElementSet& a);
ElementSet down_set(const FinitePoset& p, const ElementSet& a);
ElementSet up_set(const FinitePoset& p, const std::vector<std::string>& a);
ElementSet down_set(const FinitePoset& p, const std::vector<std::string>& a);
bool is_up_closed(const FinitePoset& p, const ElementSet& a);
bool is_down_closed(const FinitePoset& p, const ElementSet& a);

/// Same points, discrete order (x <= y iff x == y): the order-forgetting functor.
FinitePoset order_erase(const FinitePoset& p);
/// Opposite order.
FinitePoset order_dual(const FinitePoset& p);

/// A total function between finite preorders, not necessarily monotone.
class RawMap {
 public:
  RawMap(FinitePoset source, FinitePoset target, std::vector<Index> values);

  const FinitePoset& source() const noexcept { return source_; }
  const FinitePoset& target() const noexcept { return target_; }
  const std::vector<Index>& values() const noexcept { return values_; }
  Index operator()(Index x) const { return values_[x]; }

  static RawMap identity(const FinitePoset& p);
  static RawMap constant(const FinitePoset& source, const FinitePoset& target, Index value);

  friend bool operator==(const RawMap& a, const RawMap& b) {
    return a.values_ == b.values_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<Index> values_;
};

struct MonotonicityReport {
  bool ok = true;
  std::optional<IndexPair> witness;  // x <= y in source with f(x) not <= f(y)
};

MonotonicityReport is_monotone(const RawMap& f);

/// A RawMap known to be monotone.
class MonotoneMap {
 public:
  /// Throws PreconditionError with a witness pair when `f` is not monotone.
  explicit MonotoneMap(RawMap f);

  const RawMap& raw() const noexcept { return f_; }
  const FinitePoset& source() const noexcept { return f_.source(); }
  const FinitePoset& target() const noexcept { return f_.target(); }
  Index operator()(Index x) const { return f_(x); }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) { return a.f_ == b.f_; }

 private:
  RawMap f_;
};

/// A finite poset together with its total meet and join tables.
class FiniteLattice {
 public:
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Index meet(Index a, Index b) const noexcept { return meet_[a * size() + b]; }
  Index join(Index a, Index b) const noexcept { return join_[a * size() + b]; }
  Index top() const noexcept { return top_; }
  Index bottom() const noexcept { return bottom_; }

 private:
  friend struct LatticeBuilder;
  FiniteLattice(FinitePoset p, std::vector<Index> meet, std::vector<Index> join, Index bottom,
                Index top)
      : poset_(std::move(p)), meet_(std::move(meet)), join_(std::move(join)), bottom_(bottom), top_(top) {}

  FinitePoset poset_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

struct LatticeFailure {
  std::optional<IndexPair> witness;
  std::string reason;
};

using LatticeResult = std::variant<FiniteLattice, LatticeFailure>;

/// Exhaustive glb/lub search. Fails on the empty poset, on non-antisymmetric
/// preorders, and on the first pair lacking a glb or lub.
LatticeResult as_lattice(const FinitePoset& p);
/// as_lattice, throwing InputError on failure.
FiniteLattice require_lattice(const FinitePoset& p);

/// Meet of a subset; the empty meet is top.
Index big_meet(const FiniteLattice& l, const ElementSet& s);
/// Join of a subset; the empty join is bottom.
Index big_join(const FiniteLattice& l, const ElementSet& s);

FiniteLattice lattice_dual(const FiniteLattice& l);

/// Named desk-scale examples used by tests, the CLI, and docs.
namespace standard {
FinitePoset chain(std::size_t n, const std::string& prefix = "x");
FinitePoset antichain(std::size_t n, const std::string& prefix = "x");
/// {bot, a, b, top} with a, b incomparable.
FinitePoset diamond();
/// N5: bot < a < c < top, bot < b < top, b incomparable to a and c.
FinitePoset pentagon();
/// M3: bot < a, b, c < top.
FinitePoset m3();
/// Product of chains with the given lengths, names "i,j,...".
FinitePoset chain_product(const std::vector<std::size_t>& lengths);
}  // namespace standard

}  // namespace dihom
