#include "harp/svg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace harp {

void write_layout_svg(const Graph& g, const EmbeddingMatrix& coords,
                      const std::string& path) {
  if (coords.dim() != 2 || coords.rows() != g.node_count()) {
    throw std::invalid_argument("svg: need a |V| x 2 coordinate matrix");
  }
  const double size = 640.0;
  const double margin = 20.0;

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (coords.rows() > 0) {
    xmin = xmax = coords.row(0)[0];
    ymin = ymax = coords.row(0)[1];
    for (std::size_t v = 1; v < coords.rows(); ++v) {
      xmin = std::min(xmin, coords.row(v)[0]);
      xmax = std::max(xmax, coords.row(v)[0]);
      ymin = std::min(ymin, coords.row(v)[1]);
      ymax = std::max(ymax, coords.row(v)[1]);
    }
  }
  const double xspan = xmax > xmin ? xmax - xmin : 1.0;
  const double yspan = ymax > ymin ? ymax - ymin : 1.0;
  auto px = [&](double x) { return margin + (x - xmin) / xspan * (size - 2 * margin); };
  auto py = [&](double y) { return margin + (ymax - y) / yspan * (size - 2 * margin); };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  g.for_each_edge([&](NodeId u, NodeId v, double) {
    out << "<line x1=\"" << px(coords.row(u)[0]) << "\" y1=\"" << py(coords.row(u)[1])
        << "\" x2=\"" << px(coords.row(v)[0]) << "\" y2=\"" << py(coords.row(v)[1])
        << "\" stroke=\"#8888cc\" stroke-width=\"0.4\"/>\n";
  });
  for (std::size_t v = 0; v < coords.rows(); ++v) {
    out << "<circle cx=\"" << px(coords.row(v)[0]) << "\" cy=\"" << py(coords.row(v)[1])
        << "\" r=\"1.6\" fill=\"#aa2222\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace harp
