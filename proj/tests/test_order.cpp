#include <doctest.h>

#include "dihom/errors.hpp"
#include "dihom/order.hpp"
#include "oracles.hpp"

using namespace dihom;
using standard::chain;
using standard::diamond;

namespace {
std::vector<std::string> sorted_names(const FinitePoset& p, const ElementSet& s) {
  auto v = p.names_of(s);
  std::sort(v.begin(), v.end());
  return v;
}
using Names = std::vector<std::string>;
}  // namespace

TEST_CASE("up_set and down_set on small examples") {
  auto c = chain(3);
  CHECK(sorted_names(c, up_set(c, Names{"x1"})) == Names{"x1", "x2"});
  CHECK(sorted_names(c, down_set(c, Names{"x1"})) == Names{"x0", "x1"});
  CHECK(up_set(c, c.empty_set()).empty());
  CHECK(down_set(c, c.all()) == c.all());

  auto d = diamond();
  CHECK(sorted_names(d, up_set(d, Names{"a", "b"})) == Names{"a", "b", "top"});
  CHECK(sorted_names(d, down_set(d, Names{"a"})) == Names{"a", "bot"});
  CHECK_THROWS_AS(up_set(d, Names{"nope"}), InputError);
}

TEST_CASE("constructors validate instead of repairing") {
  CHECK_THROWS_AS(FinitePoset::from_named_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_named_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_named_pairs({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_named_pairs({"a"}, {{"a", "z"}}), InputError);

  auto pre = FinitePoset::from_named_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}, FinitePoset::Kind::preorder);
  CHECK_FALSE(pre.antisymmetric());
  CHECK(pre.leq(1, 0));
  // Reflexive pairs are added.
  auto p = FinitePoset::from_named_pairs({"a"}, {});
  CHECK(p.leq(0, 0));
}

TEST_CASE("is_monotone") {
  auto c = chain(2);
  auto d = diamond();
  CHECK(is_monotone(RawMap::identity(d)).ok);
  CHECK(is_monotone(RawMap::constant(c, d, d.index_of("a"))).ok);

  RawMap f(c, d, {d.index_of("a"), d.index_of("b")});
  auto r = is_monotone(f);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(*r.witness == IndexPair{0, 1});
  CHECK_THROWS_AS(MonotoneMap{f}, PreconditionError);

  CHECK_THROWS_AS(RawMap(c, d, {0}), InputError);
  CHECK_THROWS_AS(RawMap(c, d, {0, 9}), InputError);
}

TEST_CASE("as_lattice examples") {
  auto d = diamond();
  auto l = require_lattice(d);
  auto a = d.index_of("a"), b = d.index_of("b");
  CHECK(l.meet(a, b) == d.index_of("bot"));
  CHECK(l.join(a, b) == d.index_of("top"));
  CHECK(l.bottom() == d.index_of("bot"));
  CHECK(l.top() == d.index_of("top"));

  auto r = as_lattice(standard::antichain(2));
  auto* f = std::get_if<LatticeFailure>(&r);
  REQUIRE(f);
  REQUIRE(f->witness);
  CHECK(*f->witness == IndexPair{0, 1});

  auto c = require_lattice(chain(4));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) {
      CHECK(c.meet(i, j) == std::min(i, j));
      CHECK(c.join(i, j) == std::max(i, j));
    }

  CHECK(std::holds_alternative<LatticeFailure>(as_lattice(FinitePoset())));
  CHECK(std::holds_alternative<LatticeFailure>(as_lattice(FinitePoset::from_named_pairs(
      {"a", "b"}, {{"a", "b"}, {"b", "a"}}, FinitePoset::Kind::preorder))));
  CHECK_THROWS_AS(require_lattice(standard::antichain(2)), InputError);
}

TEST_CASE("big_meet") {
  auto d = diamond();
  auto l = require_lattice(d);
  CHECK(big_meet(l, d.subset({"a", "b"})) == d.index_of("bot"));
  CHECK(big_meet(l, d.subset({"a"})) == d.index_of("a"));
  CHECK(big_meet(l, d.empty_set()) == l.top());
  CHECK(big_join(l, d.empty_set()) == l.bottom());
}

TEST_CASE("order_erase and order_dual") {
  auto e = order_erase(chain(3));
  CHECK(e == standard::antichain(3));
  CHECK(order_erase(standard::antichain(3)) == standard::antichain(3));
  CHECK(order_erase(diamond()).relation().size() == 4);

  auto d = order_dual(chain(3));
  CHECK(d.leq(2, 0));
  CHECK_FALSE(d.leq(0, 2));
  CHECK(order_dual(d) == chain(3));
}

TEST_CASE("closure operators, exhaustive on posets up to 5 elements") {
  std::size_t checked = 0;
  for (const auto& p : oracle::all_posets_up_to(5)) {
    const std::uint64_t subsets = std::uint64_t{1} << p.size();
    for (std::uint64_t m = 0; m < subsets; ++m) {
      auto a = ElementSet::from_mask(p.size(), m);
      auto u = up_set(p, a), d = down_set(p, a);
      REQUIRE(a.is_subset_of(u));
      REQUIRE(a.is_subset_of(d));
      REQUIRE(up_set(p, u) == u);
      REQUIRE(down_set(p, d) == d);
      REQUIRE(is_up_closed(p, u) == oracle::up_closed(p, u.mask()));
      REQUIRE(is_up_closed(p, a) == oracle::up_closed(p, m));
      ++checked;
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("up/down pivot identity on posets up to 4 elements") {
  for (const auto& p : oracle::all_posets_up_to(4)) {
    const std::uint64_t subsets = std::uint64_t{1} << p.size();
    for (std::uint64_t ma = 0; ma < subsets; ++ma)
      for (std::uint64_t mb = 0; mb < subsets; ++mb) {
        auto a = ElementSet::from_mask(p.size(), ma), b = ElementSet::from_mask(p.size(), mb);
        REQUIRE(a.intersects(down_set(p, b)) == up_set(p, a).intersects(b));
      }
  }
}

TEST_CASE("as_lattice agrees with brute-force bound search on posets up to 5 elements") {
  std::size_t lattices = 0;
  for (const auto& p : oracle::all_posets_up_to(5)) {
    auto r = as_lattice(p);
    bool expect = oracle::is_lattice(p);
    REQUIRE(std::holds_alternative<FiniteLattice>(r) == expect);
    if (!expect) continue;
    ++lattices;
    const auto& l = std::get<FiniteLattice>(r);
    for (Index a = 0; a < p.size(); ++a) {
      REQUIRE(p.leq(l.bottom(), a));
      REQUIRE(p.leq(a, l.top()));
      for (Index b = 0; b < p.size(); ++b) {
        REQUIRE(l.meet(a, b) == *oracle::glb(p, {a, b}));
        REQUIRE(l.join(a, b) == *oracle::lub(p, {a, b}));
        REQUIRE(l.meet(a, l.join(a, b)) == a);
        REQUIRE(l.join(a, l.meet(a, b)) == a);
      }
    }
    // big_meet: a lower bound, and the greatest one.
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      auto s = ElementSet::from_mask(p.size(), m);
      auto bm = big_meet(l, s);
      auto idx = s.indices();
      REQUIRE(bm == *oracle::glb(p, idx));
      for (Index x : idx) REQUIRE(p.leq(bm, x));
    }
  }
  // Labelled lattices on 1..5 elements: 1 + 2 + 6 + 36 + 380.
  CHECK(lattices == 425);
}

TEST_CASE("standard lattices") {
  CHECK(require_lattice(standard::pentagon()).size() == 5);
  CHECK(require_lattice(standard::m3()).size() == 5);
  auto cp = standard::chain_product({2, 3});
  CHECK(cp.size() == 6);
  CHECK(cp.leq(cp.index_of("0,1"), cp.index_of("1,2")));
  CHECK_FALSE(cp.leq(cp.index_of("1,0"), cp.index_of("0,2")));
  auto dual = lattice_dual(require_lattice(standard::pentagon()));
  CHECK(dual.top() == standard::pentagon().index_of("bot"));
}
