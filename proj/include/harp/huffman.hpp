#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace harp {

// Binary Huffman coding over the vocabulary, used by hierarchical softmax.
// Leaf v's root-to-parent internal nodes are paths[v], and codes[v] holds the
// branch taken at each of them (so both vectors always have equal length).
struct HuffmanTree {
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::vector<std::uint8_t>> codes;
  std::size_t internal_count = 0;

  std::size_t leaf_count() const { return paths.size(); }
};

// Standard Huffman construction over the frequencies (zeros are lifted to 1
// so every leaf keeps a code). Ties merge in deterministic (frequency,
// creation order) order.
HuffmanTree build_huffman_tree(std::span<const std::uint64_t> frequencies);

}  // namespace harp
