#include "dihom/svg.hpp"

#include <algorithm>
#include <sstream>

namespace dihom::svg {

namespace {

void rect(std::ostringstream& os, const grid::Box& b, const char* style) {
  os << "  <rect x=\"" << b.lo[0] << "\" y=\"" << b.lo[1] << "\" width=\"" << (b.hi[0] - b.lo[0])
     << "\" height=\"" << (b.hi[1] - b.lo[1]) << "\" " << style << "/>\n";
}

}  // namespace

std::string render(const grid::GridComplex& x, const Layers& layers) {
  const auto& h = x.hull();
  const double w = h.hi[0] - h.lo[0];
  const double ht = h.hi[1] - h.lo[1];
  const double stroke = std::max(w, ht) / 200.0;
  std::ostringstream os;
  os.precision(17);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << h.lo[0] << " " << h.lo[1] << " " << w << " "
     << ht << "\">\n";
  os << "  <defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" << 4 * stroke << "\" height=\""
     << 4 * stroke << "\" patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << 4 * stroke
     << "\" stroke=\"#444\" stroke-width=\"" << stroke << "\"/></pattern></defs>\n";
  // flip so that the second coordinate grows upwards
  os << "  <g transform=\"matrix(1 0 0 -1 0 " << (h.lo[1] + h.hi[1]) << ")\" stroke-width=\"" << stroke << "\">\n";
  for (const auto& p : x.pieces()) rect(os, p, "fill=\"#f4f4f4\" stroke=\"#000\"");
  if (layers.shaded)
    for (const auto& b : layers.shaded->boxes()) rect(os, b, "fill=\"#d9534f\" fill-opacity=\"0.45\" stroke=\"none\"");
  for (const auto& f : x.forbidden()) rect(os, f, "fill=\"url(#hatch)\" stroke=\"#444\"");
  for (const auto& path : layers.paths) {
    os << "  <polyline fill=\"none\" stroke=\"#1f6fb4\" points=\"";
    for (std::size_t k = 0; k < path.size(); ++k) os << (k ? " " : "") << path[k][0] << "," << path[k][1];
    os << "\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace dihom::svg
