#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harp/graph.hpp"

namespace harp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
};

// Edge-list format: UTF-8 text, one edge per line as
//   <source> <target> [<weight>]
// with whitespace-separated tokens. Lines starting with '#' and blank lines
// are ignored. The optional weight must be a positive real (default 1.0).
// String ids are mapped to dense internal ids in first-appearance order;
// repeated edges merge by weight sum and self-loop lines are dropped
// (counted in the result).
EdgeListResult parse_edge_list(std::string_view text);
EdgeListResult load_edge_list(const std::string& path);

// Lines "u v w" using external ids when the graph has them, decimal internal
// ids otherwise. Weights are printed round-trippably.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

// Multi-label assignment over a graph's nodes. Label names are mapped to
// dense ids in [0, label_count) in first-appearance order.
struct LabelSet {
  // indexed by internal node id; sorted label ids, empty for unlabeled nodes
  std::vector<std::vector<std::uint32_t>> node_labels;
  std::uint32_t label_count = 0;
  std::vector<std::string> label_names;

  std::vector<NodeId> labeled_nodes() const;
  bool has_label(NodeId v, std::uint32_t label) const;
};

// Label format: one node per line,
//   <node id> <label> [<label> ...]
// with labels separated by whitespace or commas. Node ids must exist in the
// graph; a line without labels is an error.
LabelSet parse_labels(std::string_view text, const Graph& g);
LabelSet load_labels(const std::string& path, const Graph& g);

// Same format resolved against an explicit id list (index = node id), e.g.
// the row ids of a stored embedding.
LabelSet parse_labels(std::string_view text, const std::vector<std::string>& ids);

std::string read_file(const std::string& path);

}  // namespace harp
