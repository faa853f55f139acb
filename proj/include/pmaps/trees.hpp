#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "pmaps/bigint.hpp"
#include "pmaps/map_core.hpp"

namespace pmaps {

using Rng = std::mt19937_64;

// Binary trees are PlanarMaps with one face; every node has degree 3 and
// leaves are stems. For a node entered through its father dart f, the left
// son hangs from sigma(f) and the right son from sigma(sigma(f)).

// Plain node/slot form; node 0 is the root, kids[k][s] = -1 for a leaf.
struct NodeTree {
  std::vector<std::array<int, 2>> kids;
  std::vector<Color> colors;  // empty when uncolored
};

// Darts 3k, 3k+1, 3k+2 belong to node k; dart 0 is the root stem.
PlanarMap node_tree_to_map(const NodeTree& t);
// Preorder node numbering from the root stem.
NodeTree map_to_node_tree(const PlanarMap& tree);
// Same tree rerooted at stem s, renumbered canonically.
PlanarMap reroot_tree(const PlanarMap& tree, int stem);

std::vector<bool> paren_encode(const PlanarMap& tree);
PlanarMap paren_decode(const std::vector<bool>& bits);
PlanarMap paren_decode(const std::vector<bool>& bits, int nodes);

// Combined letters: 'L' leaf (-1); black node with child pattern
// 'a' (leaf,leaf) -1, 'b' (white,leaf) +1, 'c' (leaf,white) +1, 'd' (white,white) +3.
// Black word over {N,L}; white word over {n,l}.
enum class WordKind { Combined, Black, White };
struct TreeWord {
  WordKind kind = WordKind::Combined;
  std::string letters;
  int weight() const;
  bool operator==(const TreeWord& o) const { return kind == o.kind && letters == o.letters; }
};
int letter_weight(char c);

struct WordTriple {
  TreeWord combined, black, white;
};
// Tree must be colored and rooted at a stem of a black node.
WordTriple tree_to_words(const PlanarMap& tree);
TreeWord combine_words(const TreeWord& black, const TreeWord& white);
std::pair<TreeWord, TreeWord> split_word(const TreeWord& combined);
// Index of the unique conjugate whose strict prefixes are >= 0 (total must be -1).
size_t cycle_lemma_shift(const std::vector<int>& weights);
TreeWord rotate_word(const TreeWord& w, size_t shift);
PlanarMap combined_to_tree(const TreeWord& combined);
PlanarMap words_to_tree(const TreeWord& black, const TreeWord& white);

PlanarMap sample_black_rooted(int i, int j, Rng& rng);
PlanarMap sample_rooted_binary(int n, Rng& rng);
// Uniform tree with n black nodes, no stem on a black node, rooted at a stem.
PlanarMap sample_triangulation_tree(int n, Rng& rng);

BigInt rank_composition_word(const std::vector<bool>& word);
std::vector<bool> unrank_composition_word(int length, int ones, const BigInt& rank);

bool is_triangulation_tree(const PlanarMap& tree);

// k distinct positions out of n, sorted.
std::vector<int> random_subset(int n, int k, Rng& rng);

}  // namespace pmaps
