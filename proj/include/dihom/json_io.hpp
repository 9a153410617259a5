#pragma once

#include <json.hpp>

#include "dihom/free_lattice.hpp"
#include "dihom/future.hpp"
#include "dihom/grid.hpp"
#include "dihom/monotonize.hpp"
#include "dihom/order.hpp"

namespace dihom::io {

using nlohmann::json;

// Posets: {"elements": [...], "leq": [["a","b"], ...]}; reflexive pairs are
// optional on input and always emitted.
json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

// Lattices add "meet"/"join" tables (rows in element order, entries are names).
// Tables are recomputed on load and compared when present.
json to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const json& j);

json to_json(const RawMap& f);
/// {"source": poset, "target": poset, "values": {"x": "y", ...}}
RawMap map_from_json(const json& j);

json to_json(const UpSetLattice& f);
/// Recomputes the carrier and checks it against "carrier" when present.
UpSetLattice free_lattice_from_json(const json& j, const FreeLatticeOptions& opt = {});

json to_json(const grid::Point& p);
grid::Point point_from_json(const json& j);
json to_json(const grid::Box& b);
grid::Box box_from_json(const json& j, bool open_default);
json to_json(const std::vector<grid::Box>& boxes);

/// {"bounds": box | [box, ...], "forbidden": [box, ...]}
json to_json(const grid::GridComplex& x);
grid::GridComplex scene_from_json(const json& j);
json to_json(const grid::Region& r);

json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const json& j);
json to_json(const TimedHomotopy& h);
TimedHomotopy homotopy_from_json(const json& j);
json to_json(const FiniteHomotopy& h);
FiniteHomotopy finite_homotopy_from_json(const json& j);

json to_json(const FutureReport& r);
json to_json(const grid::LowerOpenReport& r);
json to_json(const grid::SupClosedReport& r);
json to_json(const AdjunctionReport& r);
json to_json(const grid::DipathClasses& c);

}  // namespace dihom::io
