#include "dihom/future.hpp"

#include <algorithm>
#include <cmath>

#include "dihom/errors.hpp"

namespace dihom {

namespace {

constexpr double kTimeTol = 1e-12;

std::vector<double> reflected_union(const std::vector<double>& times) {
  std::vector<double> all = times;
  for (double t : times) {
    double r = 1.0 - t;
    bool present = std::any_of(all.begin(), all.end(), [&](double s) { return std::abs(s - r) <= kTimeTol; });
    if (!present) all.push_back(r);
  }
  std::sort(all.begin(), all.end());
  return all;
}

// Index of the last original sample <= t.
std::size_t earlier_sample(const std::vector<double>& times, double t) {
  std::size_t k = 0;
  while (k + 1 < times.size() && times[k + 1] <= t + kTimeTol) ++k;
  return k;
}

template <class Frame>
std::vector<Frame> resample(const std::vector<Frame>& frames, const std::vector<double>& from,
                            const std::vector<double>& to) {
  std::vector<Frame> out;
  out.reserve(to.size());
  for (double t : to) out.push_back(frames[earlier_sample(from, t)]);
  return out;
}

void require_symmetric(const std::vector<double>& times) {
  if (!times_symmetric(times))
    throw InputError("time samples are not closed under t -> 1 - t; symmetrize the homotopy first");
}

std::string vertex_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

bool times_symmetric(const std::vector<double>& times) {
  const std::size_t n = times.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(times[i] + times[n - 1 - i] - 1.0) > kTimeTol) return false;
  return true;
}

TimedHomotopy symmetrized(const TimedHomotopy& h) {
  auto t = reflected_union(h.times());
  return TimedHomotopy(resample(h.frames(), h.times(), t), t);
}

FiniteHomotopy symmetrized(const FiniteHomotopy& h) {
  auto t = reflected_union(h.times());
  return FiniteHomotopy(resample(h.frames(), h.times(), t), t);
}

JK<TimedHomotopy> synthesize_jk(const TimedHomotopy& h, Orientation o) {
  require_symmetric(h.times());
  for (std::size_t f = 0; f < h.size(); ++f) {
    if (auto w = monotonicity_violation(h.frames()[f])) {
      throw PreconditionError("frame " + std::to_string(f) + " is not monotone: vertex " +
                              vertex_str(w->lower[0], w->lower[1]) + " <= " + vertex_str(w->upper[0], w->upper[1]) +
                              " but its value is not below");
    }
  }
  const std::size_t n = h.size();
  auto combine = [o](GridFunction& acc, const GridFunction& f) {
    if (o == Orientation::future)
      acc.values() = acc.values().min(f.values());
    else
      acc.values() = acc.values().max(f.values());
  };
  std::vector<GridFunction> prefix, suffix(n, h.first());
  prefix.reserve(n);
  prefix.push_back(h.first());
  for (std::size_t s = 1; s < n; ++s) {
    prefix.push_back(prefix.back());
    combine(prefix.back(), h.frames()[s]);
  }
  suffix[n - 1] = h.last();
  for (std::size_t s = n - 1; s-- > 0;) {
    suffix[s] = suffix[s + 1];
    combine(suffix[s], h.frames()[s]);
  }
  std::vector<GridFunction> j;
  j.reserve(n);
  for (std::size_t i = 0; i < n; ++i) j.push_back(prefix[n - 1 - i]);
  return {TimedHomotopy(std::move(j), h.times()), TimedHomotopy(std::move(suffix), h.times())};
}

JK<FiniteHomotopy> synthesize_jk(const FiniteHomotopy& h, const FiniteLattice& target, Orientation o) {
  require_symmetric(h.times());
  const std::size_t n = h.size();
  for (std::size_t f = 0; f < n; ++f) {
    if (!(h.frames()[f].target() == target.poset())) throw InputError("homotopy target is not the given lattice");
    auto r = is_monotone(h.frames()[f]);
    if (!r.ok) {
      const auto& src = h.frames()[f].source();
      throw PreconditionError("frame " + std::to_string(f) + " is not monotone: " + src.name(r.witness->first) +
                              " <= " + src.name(r.witness->second));
    }
  }
  auto combine = [&](const RawMap& a, const RawMap& b) {
    std::vector<Index> v(a.values().size());
    for (Index x = 0; x < v.size(); ++x) v[x] = o == Orientation::future ? target.meet(a(x), b(x)) : target.join(a(x), b(x));
    return RawMap(a.source(), a.target(), std::move(v));
  };
  std::vector<RawMap> prefix{h.frames().front()};
  for (std::size_t s = 1; s < n; ++s) prefix.push_back(combine(prefix.back(), h.frames()[s]));
  std::vector<RawMap> suffix{h.frames().back()};
  for (std::size_t s = n - 1; s-- > 0;) suffix.push_back(combine(suffix.back(), h.frames()[s]));
  std::reverse(suffix.begin(), suffix.end());
  std::vector<RawMap> j;
  for (std::size_t i = 0; i < n; ++i) j.push_back(prefix[n - 1 - i]);
  return {FiniteHomotopy(std::move(j), h.times()), FiniteHomotopy(std::move(suffix), h.times())};
}

FutureReport verify_future_homotopy(const TimedHomotopy& h) {
  FutureReport rep;
  for (std::size_t f = 0; f < h.size(); ++f) {
    if (auto w = monotonicity_violation(h.frames()[f])) {
      rep.ok = false;
      rep.reason = "frame is not monotone";
      rep.frame = f;
      rep.witness = {w->lower[0], w->lower[1], w->upper[0], w->upper[1]};
      return rep;
    }
  }
  for (std::size_t f = 1; f < h.size(); ++f) {
    const auto& a = h.frames()[f - 1];
    const auto& b = h.frames()[f];
    for (std::size_t i = 0; i < a.nx(); ++i)
      for (std::size_t j = 0; j < a.ny(); ++j) {
        if (a.absent(i, j) || (a.at(i, j) <= b.at(i, j)).all()) continue;
        rep.ok = false;
        rep.reason = "value decreases in time";
        rep.frame = f;
        rep.witness = {i, j, i, j};
        return rep;
      }
  }
  return rep;
}

FutureReport verify_future_homotopy(const FiniteHomotopy& h, const FiniteLattice& target) {
  FutureReport rep;
  const auto& t = target.poset();
  for (std::size_t f = 0; f < h.size(); ++f) {
    auto r = is_monotone(h.frames()[f]);
    if (!r.ok) {
      rep.ok = false;
      rep.reason = "frame is not monotone";
      rep.frame = f;
      rep.witness = {r.witness->first, r.witness->second, 0, 0};
      return rep;
    }
  }
  for (std::size_t f = 1; f < h.size(); ++f) {
    const auto& a = h.frames()[f - 1];
    const auto& b = h.frames()[f];
    for (Index x = 0; x < a.values().size(); ++x) {
      if (t.leq(a(x), b(x))) continue;
      rep.ok = false;
      rep.reason = "value decreases in time";
      rep.frame = f;
      rep.witness = {x, x, 0, 0};
      return rep;
    }
  }
  return rep;
}

TimedHomotopy straight_line_contraction(std::size_t nx, std::size_t ny, std::size_t dim_out, std::size_t frames) {
  if (frames < 2) throw InputError("a contraction needs at least two frames");
  auto id = GridFunction::identity_sampling(nx, ny, dim_out);
  std::vector<GridFunction> out;
  for (std::size_t k = 0; k < frames; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(frames - 1);
    GridFunction f = id;
    if (k + 1 == frames)
      f.values().setOnes();
    else
      f.values() = (id.values() + t * (1.0 - id.values())).min(1.0);
    out.push_back(std::move(f));
  }
  return TimedHomotopy::uniform(std::move(out));
}

FiniteHomotopy two_frame_contraction(const FiniteLattice& l) {
  return FiniteHomotopy({RawMap::identity(l.poset()), RawMap::constant(l.poset(), l.poset(), l.top())}, {0.0, 1.0});
}

TimedHomotopy time_reversed(const TimedHomotopy& h) {
  std::vector<GridFunction> f(h.frames().rbegin(), h.frames().rend());
  std::vector<double> t;
  for (auto it = h.times().rbegin(); it != h.times().rend(); ++it) t.push_back(1.0 - *it);
  t.front() = 0.0;
  t.back() = 1.0;
  return TimedHomotopy(std::move(f), std::move(t));
}

FiniteHomotopy time_reversed(const FiniteHomotopy& h) {
  std::vector<RawMap> f(h.frames().rbegin(), h.frames().rend());
  std::vector<double> t;
  for (auto it = h.times().rbegin(); it != h.times().rend(); ++it) t.push_back(1.0 - *it);
  t.front() = 0.0;
  t.back() = 1.0;
  return FiniteHomotopy(std::move(f), std::move(t));
}

GridFunction value_dual(const GridFunction& f) {
  GridFunction g = f;
  g.values() = 1.0 - f.values();
  return g;
}

TimedHomotopy contract(const TimedHomotopy& classical) {
  const auto& first = classical.first();
  if (first.has_absent()) throw UnsupportedError("contractions are defined on full grids");
  if (!(first == GridFunction::identity_sampling(first.nx(), first.ny(), first.dim_out())))
    throw InputError("classical contraction does not start at the identity sampling");
  if (!(classical.last() == GridFunction::constant(first.nx(), first.ny(), first.dim_out(), 1.0)))
    throw InputError("classical contraction does not end at the constant top map");
  auto monotone = symmetrized(retract_homotopy(classical));
  auto dual = synthesize_jk(monotone, Orientation::past);
  auto out = time_reversed(dual.j);
  auto rep = verify_future_homotopy(out);
  if (!rep.ok) throw ContractError("future contraction failed verification: " + rep.reason);
  if (!(out.last() == GridFunction::constant(first.nx(), first.ny(), first.dim_out(), 1.0)))
    throw ContractError("future contraction does not end at top");
  return out;
}

FiniteHomotopy contract(const FiniteLattice& l, const FiniteHomotopy& classical) {
  if (!(classical.frames().front() == RawMap::identity(l.poset())))
    throw InputError("classical contraction does not start at the identity");
  if (!(classical.frames().back() == RawMap::constant(l.poset(), l.poset(), l.top())))
    throw InputError("classical contraction does not end at the constant top map");
  auto monotone = symmetrized(retract_homotopy(classical, l));
  auto dual = synthesize_jk(monotone, l, Orientation::past);
  auto out = time_reversed(dual.j);
  auto rep = verify_future_homotopy(out, l);
  if (!rep.ok) throw ContractError("future contraction failed verification: " + rep.reason);
  return out;
}

}  // namespace dihom
