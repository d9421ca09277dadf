#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "harp/graph.hpp"
#include "harp/rng.hpp"

namespace harp {

// Dense row-major |V| x d matrix of node vectors.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t dim)
      : rows_(rows), dim_(dim), data_(rows * dim, 0.0) {}

  // word2vec-style init: uniform in [-0.5/d, 0.5/d).
  static EmbeddingMatrix random_init(std::size_t rows, std::size_t dim, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool all_finite() const;

  bool operator==(const EmbeddingMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Text format: header "<rows> <dim>", then per node
//   <id> <v1> ... <vd>
// where <id> is the graph's external id and values are printed with enough
// digits to round-trip exactly.
void save_embedding(const EmbeddingMatrix& m, const Graph& g, std::ostream& out);
void save_embedding(const EmbeddingMatrix& m, const Graph& g, const std::string& path);

struct LoadedEmbedding {
  EmbeddingMatrix matrix;
  std::vector<std::string> ids;  // row order as stored
};

LoadedEmbedding parse_embedding(std::string_view text);
LoadedEmbedding load_embedding(const std::string& path);

// Reorders a loaded embedding's rows to a graph's internal node ids
// (matching on external id). Throws if any graph node is missing.
EmbeddingMatrix align_to_graph(const LoadedEmbedding& loaded, const Graph& g);

}  // namespace harp
