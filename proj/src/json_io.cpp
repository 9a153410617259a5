#include "dihom/json_io.hpp"

#include <algorithm>
#include <set>

#include "dihom/errors.hpp"

namespace dihom::io {

namespace {

template <class T>
T get_as(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

json table(const FiniteLattice& l, bool meet) {
  json rows = json::array();
  for (Index a = 0; a < l.size(); ++a) {
    json row = json::array();
    for (Index b = 0; b < l.size(); ++b) row.push_back(l.poset().name(meet ? l.meet(a, b) : l.join(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const FinitePoset& p) {
  json leq = json::array();
  for (auto [i, j] : p.relation()) leq.push_back({p.name(i), p.name(j)});
  return {{"elements", p.names()}, {"leq", std::move(leq)}};
}

FinitePoset poset_from_json(const json& j) {
  auto names = get_as<std::vector<std::string>>(j, "elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    for (const auto& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2) throw InputError("each leq entry must be a pair of names");
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  bool preorder = j.value("preorder", false);
  return FinitePoset::from_named_pairs(std::move(names), pairs,
                                       preorder ? FinitePoset::Kind::preorder : FinitePoset::Kind::poset);
}

json to_json(const FiniteLattice& l) {
  json out = to_json(l.poset());
  out["meet"] = table(l, true);
  out["join"] = table(l, false);
  out["top"] = l.poset().name(l.top());
  out["bottom"] = l.poset().name(l.bottom());
  return out;
}

FiniteLattice lattice_from_json(const json& j) {
  auto l = require_lattice(poset_from_json(j));
  for (const char* key : {"meet", "join"}) {
    if (j.contains(key) && j.at(key) != table(l, std::string(key) == "meet"))
      throw InputError(std::string("stored ") + key + " table disagrees with the order");
  }
  return l;
}

json to_json(const RawMap& f) {
  json values = json::object();
  for (Index x = 0; x < f.source().size(); ++x) values[f.source().name(x)] = f.target().name(f(x));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"values", std::move(values)}};
}

RawMap map_from_json(const json& j) {
  auto src = poset_from_json(get_as<json>(j, "source"));
  auto tgt = poset_from_json(get_as<json>(j, "target"));
  auto vals = get_as<json>(j, "values");
  std::vector<Index> v(src.size());
  for (Index x = 0; x < src.size(); ++x) {
    if (!vals.contains(src.name(x))) throw InputError("map has no value for '" + src.name(x) + "'");
    v[x] = tgt.index_of(vals.at(src.name(x)).get<std::string>());
  }
  return RawMap(src, tgt, std::move(v));
}

json to_json(const UpSetLattice& f) {
  json carrier = json::array();
  for (const auto& s : f.carrier()) carrier.push_back(f.base().names_of(s));
  return {{"base", to_json(f.base())}, {"carrier", std::move(carrier)}};
}

UpSetLattice free_lattice_from_json(const json& j, const FreeLatticeOptions& opt) {
  auto base = poset_from_json(get_as<json>(j, "base"));
  auto f = free_lattice(base, opt);
  if (j.contains("carrier")) {
    std::set<std::vector<Index>> stored;
    for (const auto& s : j.at("carrier")) stored.insert(base.subset(s.get<std::vector<std::string>>()).indices());
    std::set<std::vector<Index>> computed;
    for (const auto& s : f.carrier()) computed.insert(s.indices());
    if (stored != computed) throw InputError("stored carrier is not the set of up-closed subsets");
  }
  return f;
}

json to_json(const grid::Point& p) { return json::array({p[0], p[1]}); }

grid::Point point_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a point must be an array of coordinates");
  if (j.size() > 2) throw UnsupportedError("only planar (2D) scenes are supported");
  if (j.size() != 2) throw InputError("a point needs two coordinates");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const grid::Box& b) {
  return {{"lo", to_json(b.lo)},
          {"hi", to_json(b.hi)},
          {"lo_open", {b.lo_open[0], b.lo_open[1]}},
          {"hi_open", {b.hi_open[0], b.hi_open[1]}}};
}

grid::Box box_from_json(const json& j, bool open_default) {
  auto lo = point_from_json(get_as<json>(j, "lo"));
  auto hi = point_from_json(get_as<json>(j, "hi"));
  grid::Box b = open_default ? grid::Box::open(lo, hi) : grid::Box::closed(lo, hi);
  if (j.contains("lo_open")) b.lo_open = j.at("lo_open").get<std::array<bool, 2>>();
  if (j.contains("hi_open")) b.hi_open = j.at("hi_open").get<std::array<bool, 2>>();
  for (int a = 0; a < 2; ++a)
    if (b.degenerate(a)) b.lo_open[a] = b.hi_open[a] = false;
  return b;
}

json to_json(const std::vector<grid::Box>& boxes) {
  json out = json::array();
  for (const auto& b : boxes) out.push_back(to_json(b));
  return out;
}

json to_json(const grid::GridComplex& x) {
  json bounds;
  if (x.pieces().size() == 1) {
    bounds = {{"lo", to_json(x.pieces()[0].lo)}, {"hi", to_json(x.pieces()[0].hi)}};
  } else {
    bounds = json::array();
    for (const auto& p : x.pieces()) bounds.push_back({{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}});
  }
  json forbidden = json::array();
  for (const auto& f : x.forbidden()) forbidden.push_back({{"lo", to_json(f.lo)}, {"hi", to_json(f.hi)}});
  return {{"bounds", std::move(bounds)}, {"forbidden", std::move(forbidden)}};
}

grid::GridComplex scene_from_json(const json& j) {
  auto bounds = get_as<json>(j, "bounds");
  std::vector<grid::Box> pieces;
  if (bounds.is_array()) {
    for (const auto& b : bounds) pieces.push_back(box_from_json(b, false));
  } else {
    pieces.push_back(box_from_json(bounds, false));
  }
  std::vector<grid::Box> forbidden;
  if (j.contains("forbidden"))
    for (const auto& f : j.at("forbidden")) forbidden.push_back(box_from_json(f, true));
  return grid::GridComplex::build(std::move(pieces), std::move(forbidden));
}

json to_json(const grid::Region& r) { return to_json(r.boxes()); }

json to_json(const GridFunction& f) {
  json values = json::array();
  for (std::size_t i = 0; i < f.nx(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.ny(); ++j) {
      if (f.absent(i, j)) {
        row.push_back(nullptr);
        continue;
      }
      json v = json::array();
      for (std::size_t k = 0; k < f.dim_out(); ++k) v.push_back(f.at(i, j)(static_cast<Eigen::Index>(k)));
      row.push_back(std::move(v));
    }
    values.push_back(std::move(row));
  }
  json absent = json::array();
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j)
      if (f.absent(i, j)) absent.push_back({i, j});
  return {{"nx", f.nx()}, {"ny", f.ny()}, {"dim_out", f.dim_out()}, {"values", std::move(values)}, {"absent", std::move(absent)}};
}

GridFunction grid_function_from_json(const json& j) {
  auto nx = get_as<std::size_t>(j, "nx");
  auto ny = get_as<std::size_t>(j, "ny");
  auto k = get_as<std::size_t>(j, "dim_out");
  GridFunction f(nx, ny, k);
  if (j.contains("absent"))
    for (const auto& a : j.at("absent")) {
      auto ij = a.get<std::array<std::size_t, 2>>();
      if (ij[0] >= nx || ij[1] >= ny) throw InputError("absent vertex out of range");
      f.set_absent(ij[0], ij[1]);
    }
  auto values = get_as<json>(j, "values");
  if (!values.is_array() || values.size() != nx) throw InputError("values must have nx rows");
  for (std::size_t i = 0; i < nx; ++i) {
    if (!values[i].is_array() || values[i].size() != ny) throw InputError("each values row must have ny entries");
    for (std::size_t jj = 0; jj < ny; ++jj) {
      if (f.absent(i, jj)) continue;
      const auto& v = values[i][jj];
      if (!v.is_array() || v.size() != k) throw InputError("each value must have dim_out coordinates");
      for (std::size_t c = 0; c < k; ++c) f.at(i, jj)(static_cast<Eigen::Index>(c)) = v[c].get<double>();
    }
  }
  f.validate();
  return f;
}

json to_json(const TimedHomotopy& h) {
  json frames = json::array();
  for (const auto& f : h.frames()) frames.push_back(to_json(f));
  return {{"frames", std::move(frames)}, {"time_samples", h.times()}};
}

TimedHomotopy homotopy_from_json(const json& j) {
  std::vector<GridFunction> frames;
  for (const auto& f : get_as<json>(j, "frames")) frames.push_back(grid_function_from_json(f));
  if (j.contains("time_samples")) return TimedHomotopy(std::move(frames), j.at("time_samples").get<std::vector<double>>());
  return TimedHomotopy::uniform(std::move(frames));
}

json to_json(const FiniteHomotopy& h) {
  json frames = json::array();
  for (const auto& f : h.frames()) {
    json values = json::object();
    for (Index x = 0; x < f.source().size(); ++x) values[f.source().name(x)] = f.target().name(f(x));
    frames.push_back(std::move(values));
  }
  const auto& f0 = h.frames().front();
  return {{"source", to_json(f0.source())}, {"target", to_json(f0.target())}, {"frames", std::move(frames)},
          {"time_samples", h.times()}};
}

FiniteHomotopy finite_homotopy_from_json(const json& j) {
  auto src = poset_from_json(get_as<json>(j, "source"));
  auto tgt = j.contains("target") ? poset_from_json(j.at("target")) : src;
  std::vector<RawMap> frames;
  for (const auto& vals : get_as<json>(j, "frames"))
    frames.push_back(map_from_json({{"source", to_json(src)}, {"target", to_json(tgt)}, {"values", vals}}));
  if (j.contains("time_samples")) return FiniteHomotopy(std::move(frames), j.at("time_samples").get<std::vector<double>>());
  return FiniteHomotopy::uniform(std::move(frames));
}

json to_json(const FutureReport& r) {
  json out = {{"ok", r.ok}};
  if (!r.ok) {
    json w = {{"reason", r.reason}};
    if (r.frame) w["frame"] = *r.frame;
    if (r.witness) w["at"] = *r.witness;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const grid::LowerOpenReport& r) {
  json out = {{"value", r.lower_open}};
  if (r.witness_point) {
    out["witness_point"] = to_json(*r.witness_point);
    out["witness_open"] = to_json(r.witness_open);
  }
  return out;
}

json to_json(const grid::SupClosedReport& r) {
  json out = {{"value", r.sup_closed}};
  if (r.witness_pair) {
    out["witness_pair"] = {to_json((*r.witness_pair)[0]), to_json((*r.witness_pair)[1])};
    out["witness_max"] = to_json(*r.witness_max);
  }
  return out;
}

json to_json(const AdjunctionReport& r) {
  return {{"ok", r.ok()}, {"checked", r.checked}, {"violations", r.violations}};
}

json to_json(const grid::DipathClasses& c) {
  json paths = json::array();
  for (const auto& p : c.representatives) {
    json pts = json::array();
    for (const auto& q : p.points) pts.push_back(to_json(q));
    paths.push_back({{"signature", p.signature}, {"points", std::move(pts)}});
  }
  json out = {{"count", c.representatives.size()}, {"representatives", std::move(paths)}};
  if (!c.diagnostic.empty()) out["diagnostic"] = c.diagnostic;
  return out;
}

}  // namespace dihom::io
