#include "harp/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace harp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_double(std::string_view tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

EdgeListResult parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::vector<WeightedEdge> edges;
  std::size_t self_loops = 0;

  std::unordered_map<std::string, NodeId> ids;
  auto intern_str = [&](std::string_view tok) {
    auto it = ids.find(std::string(tok));
    if (it != ids.end()) return it->second;
    NodeId id = static_cast<NodeId>(names.size());
    names.emplace_back(tok);
    ids.emplace(names.back(), id);
    return id;
  };

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') return;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 2 or 3 tokens, got " +
                                    std::to_string(tokens.size()));
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      if (!parse_double(tokens[2], w)) {
        throw ParseError(line_no, "malformed weight '" + std::string(tokens[2]) + "'");
      }
      if (!(w > 0.0)) {
        throw ParseError(line_no, "weight must be positive");
      }
    }
    NodeId u = intern_str(tokens[0]);
    NodeId v = intern_str(tokens[1]);
    if (u == v) {
      ++self_loops;
      return;
    }
    edges.push_back({u, v, w});
  });

  EdgeListResult result;
  result.self_loops_dropped = self_loops;
  const NodeId node_count = static_cast<NodeId>(names.size());
  result.graph = Graph::from_edges(node_count, std::move(edges), std::move(names));
  return result;
}

EdgeListResult load_edge_list(const std::string& path) {
  return parse_edge_list(read_file(path));
}

void save_edge_list(const Graph& g, std::ostream& out) {
  char buf[64];
  g.for_each_edge([&](NodeId u, NodeId v, double w) {
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    out << g.external_id(u) << ' ' << g.external_id(v) << ' ' << buf << '\n';
  });
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_edge_list(g, out);
}

std::vector<NodeId> LabelSet::labeled_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_labels.size(); ++v) {
    if (!node_labels[v].empty()) out.push_back(v);
  }
  return out;
}

bool LabelSet::has_label(NodeId v, std::uint32_t label) const {
  const auto& ls = node_labels[v];
  return std::binary_search(ls.begin(), ls.end(), label);
}

namespace {

LabelSet parse_labels_impl(std::string_view text,
                           const std::unordered_map<std::string, NodeId>& node_of,
                           std::size_t node_count) {
  LabelSet labels;
  labels.node_labels.assign(node_count, {});
  std::unordered_map<std::string, std::uint32_t> label_of;

  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    std::string line(raw);
    std::replace(line.begin(), line.end(), ',', ' ');
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') return;
    auto it = node_of.find(std::string(tokens[0]));
    if (it == node_of.end()) {
      throw ParseError(line_no, "unknown node id '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() < 2) {
      throw ParseError(line_no, "node '" + std::string(tokens[0]) + "' has no labels");
    }
    auto& ls = labels.node_labels[it->second];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      std::string name(tokens[i]);
      auto [lit, inserted] = label_of.emplace(name, static_cast<std::uint32_t>(labels.label_names.size()));
      if (inserted) labels.label_names.push_back(name);
      ls.push_back(lit->second);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  });

  labels.label_count = static_cast<std::uint32_t>(labels.label_names.size());
  return labels;
}

}  // namespace

LabelSet parse_labels(std::string_view text, const Graph& g) {
  std::unordered_map<std::string, NodeId> node_of;
  if (g.has_external_ids()) {
    for (NodeId v = 0; v < g.node_count(); ++v) node_of.emplace(g.external_id(v), v);
  } else {
    for (NodeId v = 0; v < g.node_count(); ++v) node_of.emplace(std::to_string(v), v);
  }
  return parse_labels_impl(text, node_of, g.node_count());
}

LabelSet parse_labels(std::string_view text, const std::vector<std::string>& ids) {
  std::unordered_map<std::string, NodeId> node_of;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    node_of.emplace(ids[i], static_cast<NodeId>(i));
  }
  return parse_labels_impl(text, node_of, ids.size());
}

LabelSet load_labels(const std::string& path, const Graph& g) {
  return parse_labels(read_file(path), g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace harp
