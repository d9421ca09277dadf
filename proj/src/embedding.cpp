#include "harp/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "harp/graph_io.hpp"

namespace harp {

EmbeddingMatrix EmbeddingMatrix::random_init(std::size_t rows, std::size_t dim, Rng& rng) {
  EmbeddingMatrix m(rows, dim);
  const double scale = 1.0 / static_cast<double>(dim);
  for (double& x : m.data_) {
    x = (rng.real() - 0.5) * scale;
  }
  return m;
}

bool EmbeddingMatrix::all_finite() const {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void save_embedding(const EmbeddingMatrix& m, const Graph& g, std::ostream& out) {
  if (m.rows() != g.node_count()) {
    throw std::invalid_argument("embedding: row count does not match graph");
  }
  out << m.rows() << ' ' << m.dim() << '\n';
  char buf[64];
  for (std::size_t v = 0; v < m.rows(); ++v) {
    out << g.external_id(static_cast<NodeId>(v));
    for (double x : m.row(v)) {
      std::snprintf(buf, sizeof(buf), " %.17g", x);
      out << buf;
    }
    out << '\n';
  }
}

void save_embedding(const EmbeddingMatrix& m, const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_embedding(m, g, out);
}

LoadedEmbedding parse_embedding(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t rows = 0, dim = 0;
  if (!(in >> rows >> dim)) throw std::runtime_error("embedding: malformed header");

  LoadedEmbedding out;
  out.matrix = EmbeddingMatrix(rows, dim);
  out.ids.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!(in >> out.ids[r])) throw std::runtime_error("embedding: truncated file");
    auto row = out.matrix.row(r);
    for (std::size_t c = 0; c < dim; ++c) {
      if (!(in >> row[c])) throw std::runtime_error("embedding: truncated row");
    }
  }
  return out;
}

LoadedEmbedding load_embedding(const std::string& path) {
  return parse_embedding(read_file(path));
}

EmbeddingMatrix align_to_graph(const LoadedEmbedding& loaded, const Graph& g) {
  std::unordered_map<std::string, std::size_t> row_of;
  row_of.reserve(loaded.ids.size());
  for (std::size_t r = 0; r < loaded.ids.size(); ++r) row_of.emplace(loaded.ids[r], r);

  EmbeddingMatrix out(g.node_count(), loaded.matrix.dim());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto it = row_of.find(g.external_id(v));
    if (it == row_of.end()) {
      throw std::runtime_error("embedding: no row for node '" + g.external_id(v) + "'");
    }
    auto src = loaded.matrix.row(it->second);
    auto dst = out.row(v);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

}  // namespace harp
