#include "dihom/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dihom/errors.hpp"
#include "dihom/free_lattice.hpp"
#include "dihom/future.hpp"
#include "dihom/json_io.hpp"
#include "dihom/pv.hpp"
#include "dihom/svg.hpp"

namespace dihom::cli {

namespace {

using io::json;

struct IoError : Error {
  explicit IoError(const std::string& detail) : Error("io_error", detail) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

grid::Point parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("expected a point 'x,y', got '" + s + "'");
  if (s.find(',', comma + 1) != std::string::npos) throw UnsupportedError("only planar (2D) points are supported");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("expected a point 'x,y', got '" + s + "'");
  }
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

json cmd_analyze(const std::string& input, const std::string& target_arg, const std::string& svg_path) {
  auto text = read_file(input);
  json out;
  std::optional<grid::GridComplex> scene;
  if (looks_like_json(text)) {
    scene = io::scene_from_json(json::parse(text));
  } else {
    auto prog = pv::parse_pv(text);
    out["program"] = pv::print_pv(prog);
    scene = pv::program_to_grid(prog);
  }
  grid::Point target = target_arg.empty() ? scene->hull().hi : parse_point(target_arg);
  auto unsafe = grid::unsafe_region(*scene, target);
  out["scene"] = io::to_json(*scene);
  out["target"] = io::to_json(target);
  out["unsafe"] = io::to_json(unsafe);
  out["unsafe_empty"] = unsafe.empty();
  if (!svg_path.empty()) write_file(svg_path, svg::render(*scene, {unsafe, {}}));
  return out;
}

json cmd_check(const std::string& input) {
  auto scene = io::scene_from_json(read_json(input));
  return {{"lower_open", io::to_json(grid::is_lower_open(scene))},
          {"sup_closed", io::to_json(grid::check_sup_closed(scene))}};
}

json cmd_classes(const std::string& input, const std::string& from, const std::string& to, const std::string& svg_path) {
  auto scene = io::scene_from_json(read_json(input));
  auto classes = grid::enumerate_dipath_classes(scene, parse_point(from), parse_point(to));
  if (!svg_path.empty()) {
    svg::Layers layers;
    for (const auto& p : classes.representatives) layers.paths.push_back(p.points);
    write_file(svg_path, svg::render(scene, layers));
  }
  return io::to_json(classes);
}

json cmd_monotonize(const std::string& input) {
  auto j = read_json(input);
  if (j.contains("frames") && j.contains("source")) {
    auto h = io::finite_homotopy_from_json(j);
    auto l = require_lattice(h.frames().front().target());
    return io::to_json(retract_homotopy(h, l));
  }
  if (j.contains("frames")) return io::to_json(retract_homotopy(io::homotopy_from_json(j)));
  if (j.contains("nx")) {
    auto f = io::grid_function_from_json(j);
    return io::to_json(f.has_absent() ? retract_map_vertex_poset(f) : retract_map_grid(f));
  }
  if (j.contains("source")) {
    auto f = io::map_from_json(j);
    return io::to_json(retract_map_finite(f, require_lattice(f.target())).raw());
  }
  throw InputError("expected a grid function, a homotopy, or a finite map");
}

json cmd_future(const std::string& input, bool symmetrize) {
  auto j = read_json(input);
  json out = {{"kind", "future"}};
  if (j.contains("source")) {
    auto h = io::finite_homotopy_from_json(j);
    if (symmetrize) h = symmetrized(h);
    auto l = require_lattice(h.frames().front().target());
    auto jk = synthesize_jk(h, l);
    out["j"] = io::to_json(jk.j);
    out["k"] = io::to_json(jk.k);
    out["verification"] = {{"j", io::to_json(verify_future_homotopy(jk.j, l))},
                           {"k", io::to_json(verify_future_homotopy(jk.k, l))}};
    return out;
  }
  auto h = io::homotopy_from_json(j);
  if (symmetrize) h = symmetrized(h);
  auto jk = synthesize_jk(h);
  out["j"] = io::to_json(jk.j);
  out["k"] = io::to_json(jk.k);
  out["verification"] = {{"j", io::to_json(verify_future_homotopy(jk.j))},
                         {"k", io::to_json(verify_future_homotopy(jk.k))}};
  return out;
}

json cmd_contract(const std::string& input, const std::string& homotopy_path, std::size_t frames) {
  auto req = read_json(input);
  json out;
  if (req.contains("cube")) {
    auto dim = req["cube"].value("dim", std::size_t{2});
    auto samples = req["cube"].value("samples", std::size_t{17});
    if (dim < 1 || dim > 2) throw UnsupportedError("cube targets of dimension 1 or 2 only");
    TimedHomotopy h = homotopy_path.empty()
                          ? straight_line_contraction(samples, dim == 2 ? samples : 1, dim, frames)
                          : io::homotopy_from_json(read_json(homotopy_path));
    auto c = contract(h);
    out = io::to_json(c);
    out["verification"] = io::to_json(verify_future_homotopy(c));
  } else {
    auto l = require_lattice(io::poset_from_json(req));
    FiniteHomotopy h =
        homotopy_path.empty() ? two_frame_contraction(l) : io::finite_homotopy_from_json(read_json(homotopy_path));
    auto c = contract(l, h);
    out = io::to_json(c);
    out["verification"] = io::to_json(verify_future_homotopy(c, l));
  }
  out["kind"] = "future";
  return out;
}

json cmd_flattice(const std::string& input) {
  auto p = io::poset_from_json(read_json(input));
  auto f = free_lattice(p);
  json out = {{"free_lattice", io::to_json(f)},
              {"triangle_identities", {{"unit_side", io::to_json(check_triangle_identities(p))}}}};
  auto l = as_lattice(p);
  if (auto* lat = std::get_if<FiniteLattice>(&l))
    out["triangle_identities"]["counit_side"] = io::to_json(check_triangle_identities(*lat));
  return out;
}

void fail(std::ostream& err, const std::string& kind, const std::string& detail) {
  err << json{{"error", kind}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed-homotopy toolkit: free lattices, monotonization, future homotopies, PV state spaces", "dihom"};
  app.require_subcommand(1);

  std::string input, target, svg_path, from, to, homotopy;
  std::size_t frames = 9;
  bool symmetrize = false;

  auto* analyze = app.add_subcommand("analyze", "Unsafe region of a PV program or scene");
  analyze->add_option("input", input, "program (.pv) or scene JSON")->required();
  analyze->add_option("--target", target, "target point x,y (default: upper corner)");
  analyze->add_option("--svg", svg_path, "write an SVG rendering");

  auto* check = app.add_subcommand("check", "Lower-open and sup-closed checks of a scene");
  check->add_option("input", input, "scene JSON")->required();

  auto* classes = app.add_subcommand("classes", "Dihomotopy class representatives between two points");
  classes->add_option("input", input, "scene JSON")->required();
  classes->add_option("--from", from, "source x,y")->required();
  classes->add_option("--to", to, "target x,y")->required();
  classes->add_option("--svg", svg_path, "write an SVG rendering");

  auto* monotonize = app.add_subcommand("monotonize", "Retract a map or homotopy onto monotone maps");
  monotonize->add_option("input", input, "grid function, homotopy, or finite map JSON")->required();

  auto* future = app.add_subcommand("future", "Future homotopies j, k from a homotopy through monotone maps");
  future->add_option("input", input, "homotopy JSON")->required();
  future->add_flag("--symmetrize", symmetrize, "insert reflected time samples first");

  auto* contract_cmd = app.add_subcommand("contract", "Future contraction of [0,1]^k or a finite lattice");
  contract_cmd->add_option("input", input, "{\"cube\": {\"dim\": k, \"samples\": n}} or a lattice poset JSON")
      ->required();
  contract_cmd->add_option("--homotopy", homotopy, "classical contraction JSON (default: built in)");
  contract_cmd->add_option("--frames", frames, "time samples of the default contraction")->check(CLI::Range(2, 4096));

  auto* flattice = app.add_subcommand("flattice", "Free lattice of up-sets with triangle-identity report");
  flattice->add_option("input", input, "poset JSON")->required();

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    fail(err, "usage_error", e.what());
    return 2;
  }

  try {
    json result;
    if (*analyze) result = cmd_analyze(input, target, svg_path);
    else if (*check) result = cmd_check(input);
    else if (*classes) result = cmd_classes(input, from, to, svg_path);
    else if (*monotonize) result = cmd_monotonize(input);
    else if (*future) result = cmd_future(input, symmetrize);
    else if (*contract_cmd) result = cmd_contract(input, homotopy, frames);
    else if (*flattice) result = cmd_flattice(input);
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    fail(err, e.kind(), e.what());
  } catch (const json::exception& e) {
    fail(err, "input_error", e.what());
  }
  return 1;
}

}  // namespace dihom::cli
