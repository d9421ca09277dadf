#include "harp/huffman.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace harp {

HuffmanTree build_huffman_tree(std::span<const std::uint64_t> frequencies) {
  const std::size_t n = frequencies.size();
  if (n == 0) throw std::invalid_argument("huffman: empty vocabulary");

  HuffmanTree tree;
  tree.paths.resize(n);
  tree.codes.resize(n);
  if (n == 1) {
    // Single leaf: empty code, no internal nodes.
    return tree;
  }

  // Tree slots: [0, n) leaves, [n, 2n-1) internal nodes in creation order.
  const std::size_t total = 2 * n - 1;
  std::vector<std::uint64_t> weight(total, 0);
  std::vector<std::size_t> parent(total, 0);
  std::vector<std::uint8_t> branch(total, 0);

  struct Item {
    std::uint64_t weight;
    std::size_t seq;  // creation order; leaves first, keeps merges deterministic
    std::size_t slot;
    bool operator>(const Item& o) const {
      return weight != o.weight ? weight > o.weight : seq > o.seq;
    }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t v = 0; v < n; ++v) {
    weight[v] = std::max<std::uint64_t>(frequencies[v], 1);
    heap.push({weight[v], v, v});
  }

  for (std::size_t k = 0; k < n - 1; ++k) {
    Item a = heap.top();
    heap.pop();
    Item b = heap.top();
    heap.pop();
    std::size_t slot = n + k;
    weight[slot] = a.weight + b.weight;
    parent[a.slot] = slot;
    branch[a.slot] = 0;
    parent[b.slot] = slot;
    branch[b.slot] = 1;
    heap.push({weight[slot], slot, slot});
  }

  tree.internal_count = n - 1;
  const std::size_t root = total - 1;
  for (std::size_t v = 0; v < n; ++v) {
    auto& path = tree.paths[v];
    auto& code = tree.codes[v];
    for (std::size_t cur = v; cur != root; cur = parent[cur]) {
      path.push_back(static_cast<std::uint32_t>(parent[cur] - n));
      code.push_back(branch[cur]);
    }
    std::reverse(path.begin(), path.end());
    std::reverse(code.begin(), code.end());
  }
  return tree;
}

}  // namespace harp
