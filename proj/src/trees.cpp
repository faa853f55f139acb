#include "pmaps/trees.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pmaps {

PlanarMap node_tree_to_map(const NodeTree& t) {
  const int N = static_cast<int>(t.kids.size());
  if (N == 0) throw Error(Errc::InvalidArgument, "tree without nodes");
  RawMap r;
  r.alpha.resize(3 * N);
  r.sigma.resize(3 * N);
  for (int k = 0; k < N; ++k) {
    for (int s = 0; s < 3; ++s) {
      r.alpha[3 * k + s] = 3 * k + s;
      r.sigma[3 * k + s] = 3 * k + (s + 1) % 3;
    }
  }
  for (int k = 0; k < N; ++k)
    for (int s = 0; s < 2; ++s)
      if (t.kids[k][s] >= 0) r.link(3 * k + 1 + s, 3 * t.kids[k][s]);
  return build_map(std::move(r.alpha), std::move(r.sigma), 0, -1, t.colors);
}

NodeTree map_to_node_tree(const PlanarMap& tree) {
  int root = tree.root_dart();
  if (!tree.is_stem(root)) throw Error(Errc::InvalidArgument, "tree root must be a stem");
  if (tree.num_faces() != 1) throw Error(Errc::InvalidArgument, "not a tree");
  NodeTree t;
  struct Item {
    int father, parent, side;
  };
  std::vector<Item> stack{{root, -1, 0}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    int k = static_cast<int>(t.kids.size());
    t.kids.push_back({-1, -1});
    if (tree.has_colors()) t.colors.push_back(tree.dart_color(it.father));
    if (it.parent >= 0) t.kids[it.parent][it.side] = k;
    if (tree.vertex_degree(tree.vertex(it.father)) != 3)
      throw Error(Errc::InvalidArgument, "tree node without degree 3");
    int s1 = tree.sigma(it.father), s2 = tree.sigma(s1);
    if (!tree.is_stem(s2)) stack.push_back({tree.alpha(s2), k, 1});
    if (!tree.is_stem(s1)) stack.push_back({tree.alpha(s1), k, 0});
  }
  return t;
}

PlanarMap reroot_tree(const PlanarMap& tree, int stem) {
  return node_tree_to_map(map_to_node_tree(tree.with_root(stem)));
}

std::vector<bool> paren_encode(const PlanarMap& tree) {
  NodeTree t = map_to_node_tree(tree);
  std::vector<bool> bits;
  bits.reserve(2 * t.kids.size() + 1);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (k < 0) {
      bits.push_back(false);
      continue;
    }
    bits.push_back(true);
    stack.push_back(t.kids[k][1]);
    stack.push_back(t.kids[k][0]);
  }
  bits.pop_back();  // preorder word minus its final leaf
  return bits;
}

PlanarMap paren_decode(const std::vector<bool>& bits) {
  if (bits.size() % 2 != 0) throw Error(Errc::UnbalancedWord, "odd length");
  return paren_decode(bits, static_cast<int>(bits.size() / 2));
}

PlanarMap paren_decode(const std::vector<bool>& bits, int nodes) {
  if (nodes < 1) throw Error(Errc::UnbalancedWord, "need at least one node");
  const size_t need = 2 * static_cast<size_t>(nodes);
  if (bits.size() < need) throw Error(Errc::UnbalancedWord, "word too short");
  if (bits.size() > need) throw Error(Errc::TrailingBits, "bits beyond 2n");
  int bal = 0;
  for (size_t p = 0; p < need; ++p) {
    bal += bits[p] ? 1 : -1;
    if (bal < 0) throw Error(Errc::UnbalancedWord, "prefix dips negative at bit " + std::to_string(p));
  }
  if (bal != 0) throw Error(Errc::UnbalancedWord, "unbalanced total");
  NodeTree t;
  struct Slot {
    int parent, side;
  };
  std::vector<Slot> stack{{-1, 0}};
  for (size_t p = 0; p <= need; ++p) {
    bool b = p < need ? bits[p] : false;
    Slot s = stack.back();
    stack.pop_back();
    if (!b) continue;
    int k = static_cast<int>(t.kids.size());
    t.kids.push_back({-1, -1});
    if (s.parent >= 0) t.kids[s.parent][s.side] = k;
    stack.push_back({k, 1});
    stack.push_back({k, 0});
  }
  return node_tree_to_map(t);
}

int letter_weight(char c) {
  switch (c) {
    case 'L': case 'a': return -1;
    case 'b': case 'c': return 1;
    case 'd': return 3;
    default: throw Error(Errc::InvalidArgument, std::string("bad combined letter '") + c + "'");
  }
}

int TreeWord::weight() const {
  if (kind != WordKind::Combined) throw Error(Errc::InvalidArgument, "weights live on combined words");
  int w = 0;
  for (char c : letters) w += letter_weight(c);
  return w;
}

WordTriple tree_to_words(const PlanarMap& tree) {
  if (!tree.has_colors()) throw Error(Errc::NotBicolored, "tree has no colors");
  NodeTree t = map_to_node_tree(tree);
  if (t.colors[0] != Color::Black) throw Error(Errc::NotBlackRooted, "root node is white");
  WordTriple w;
  w.combined.kind = WordKind::Combined;
  std::vector<int> stack{0};  // black nodes, or -1 for an empty white slot
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    if (b < 0) {
      w.combined.letters.push_back('L');
      continue;
    }
    int l = t.kids[b][0], r = t.kids[b][1];
    w.combined.letters.push_back("abcd"[(l >= 0) + 2 * (r >= 0)]);
    for (int c : {r, l}) {
      if (c < 0) continue;
      stack.push_back(t.kids[c][1]);
      stack.push_back(t.kids[c][0]);
    }
  }
  auto [bw, ww] = split_word(w.combined);
  w.black = std::move(bw);
  w.white = std::move(ww);
  return w;
}

std::pair<TreeWord, TreeWord> split_word(const TreeWord& combined) {
  TreeWord b{WordKind::Black, {}}, wh{WordKind::White, {}};
  for (char c : combined.letters) {
    if (c == 'L') {
      b.letters.push_back('L');
      continue;
    }
    letter_weight(c);
    b.letters.push_back('N');
    bool lw = (c == 'b' || c == 'd'), rw = (c == 'c' || c == 'd');
    wh.letters.push_back(lw ? 'n' : 'l');
    wh.letters.push_back(rw ? 'n' : 'l');
  }
  return {b, wh};
}

TreeWord combine_words(const TreeWord& black, const TreeWord& white) {
  size_t n_black = 0, n_white = 0;
  for (char c : black.letters) {
    if (c != 'N' && c != 'L') throw Error(Errc::CompositionMismatch, "black word letters are N/L");
    n_black += (c == 'N');
  }
  for (char c : white.letters) {
    if (c != 'n' && c != 'l') throw Error(Errc::CompositionMismatch, "white word letters are n/l");
    n_white += (c == 'n');
  }
  if (black.letters.size() % 2 == 0 || white.letters.size() % 2 == 1)
    throw Error(Errc::LengthMismatch, "black word length must be odd, white word length even");
  if (white.letters.size() != 2 * n_black || black.letters.size() != 2 * n_white + 1)
    throw Error(Errc::CompositionMismatch, "letter counts do not match word lengths");
  TreeWord c{WordKind::Combined, {}};
  size_t p = 0;
  for (char x : black.letters) {
    if (x == 'L') {
      c.letters.push_back('L');
      continue;
    }
    bool lw = white.letters[p] == 'n', rw = white.letters[p + 1] == 'n';
    p += 2;
    c.letters.push_back("abcd"[lw + 2 * rw]);
  }
  return c;
}

size_t cycle_lemma_shift(const std::vector<int>& weights) {
  long sum = 0, best = 0;
  size_t arg = 0;
  for (size_t k = 0; k < weights.size(); ++k) {
    sum += weights[k];
    if (k == 0 || sum < best) {
      best = sum;
      arg = k + 1;
    }
  }
  if (sum != -1) throw Error(Errc::InvalidArgument, "cycle lemma needs total weight -1");
  return arg % weights.size();
}

TreeWord rotate_word(const TreeWord& w, size_t shift) {
  TreeWord r = w;
  if (!w.letters.empty())
    std::rotate(r.letters.begin(), r.letters.begin() + (shift % w.letters.size()), r.letters.end());
  return r;
}

PlanarMap combined_to_tree(const TreeWord& combined) {
  const std::string& s = combined.letters;
  if (s.empty() || s[0] == 'L') throw Error(Errc::NotBlackRooted, "combined word must start at a black node");
  NodeTree t;
  struct Slot {
    int parent, side;
  };
  std::vector<Slot> stack{{-1, 0}};
  size_t p = 0;
  while (!stack.empty()) {
    if (p >= s.size()) throw Error(Errc::UnbalancedWord, "combined word ends early");
    Slot sl = stack.back();
    stack.pop_back();
    char c = s[p++];
    if (c == 'L') continue;
    letter_weight(c);
    int b = static_cast<int>(t.kids.size());
    t.kids.push_back({-1, -1});
    t.colors.push_back(Color::Black);
    if (sl.parent >= 0) t.kids[sl.parent][sl.side] = b;
    bool lw = (c == 'b' || c == 'd'), rw = (c == 'c' || c == 'd');
    int whites[2] = {-1, -1};
    for (int side = 0; side < 2; ++side) {
      if (!(side == 0 ? lw : rw)) continue;
      int w = static_cast<int>(t.kids.size());
      t.kids.push_back({-1, -1});
      t.colors.push_back(Color::White);
      t.kids[b][side] = w;
      whites[side] = w;
    }
    for (int side = 1; side >= 0; --side) {
      if (whites[side] < 0) continue;
      stack.push_back({whites[side], 1});
      stack.push_back({whites[side], 0});
    }
  }
  if (p != s.size()) throw Error(Errc::TrailingBits, "combined word has trailing letters");
  // renumber in preorder so equal trees give equal maps
  return reroot_tree(node_tree_to_map(t), 0);
}

PlanarMap words_to_tree(const TreeWord& black, const TreeWord& white) {
  TreeWord c = combine_words(black, white);
  std::vector<int> wts;
  wts.reserve(c.letters.size());
  for (char x : c.letters) wts.push_back(letter_weight(x));
  return combined_to_tree(rotate_word(c, cycle_lemma_shift(wts)));
}

std::vector<int> random_subset(int n, int k, Rng& rng) {
  if (k < 0 || k > n) throw Error(Errc::InvalidArgument, "subset size out of range");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int a = 0; a < k; ++a) {
    std::uniform_int_distribution<int> pick(a, n - 1);
    std::swap(idx[a], idx[pick(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

PlanarMap sample_black_rooted(int i, int j, Rng& rng) {
  if (i < 1 || j < 0 || i > 2 * j + 1 || j > 2 * i)
    throw Error(Errc::EmptyClass, "no black-rooted tree with i=" + std::to_string(i) + ", j=" + std::to_string(j));
  TreeWord b{WordKind::Black, std::string(2 * j + 1, 'L')};
  TreeWord w{WordKind::White, std::string(2 * i, 'l')};
  for (int p : random_subset(2 * j + 1, i, rng)) b.letters[p] = 'N';
  for (int p : random_subset(2 * i, j, rng)) w.letters[p] = 'n';
  return words_to_tree(b, w);
}

PlanarMap sample_rooted_binary(int n, Rng& rng) {
  if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
  std::vector<int> w(2 * n + 1, -1);
  for (int p : random_subset(2 * n + 1, n, rng)) w[p] = 1;
  size_t s = cycle_lemma_shift(w);
  std::rotate(w.begin(), w.begin() + s, w.end());
  std::vector<bool> bits(w.begin(), w.end() - 1);
  for (size_t p = 0; p < bits.size(); ++p) bits[p] = (w[p] == 1);
  return paren_decode(bits, n);
}

PlanarMap sample_triangulation_tree(int n, Rng& rng) {
  if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
  const int L = 4 * n + 2;
  std::vector<int> w(L, -1);
  for (int p : random_subset(L, n, rng)) w[p] = 3;
  // start p is good iff every partial sum of the rotation stays above -2
  std::vector<long> P(2 * L + 1, 0);
  for (int t = 0; t < 2 * L; ++t) P[t + 1] = P[t] + w[t % L];
  std::vector<int> good;
  std::deque<int> dq;  // indices of a sliding minimum over P[p+1 .. p+L-1]
  int hi = 0;
  for (int p = 0; p < L; ++p) {
    while (hi <= p + L - 1) {
      while (!dq.empty() && P[dq.back()] >= P[hi]) dq.pop_back();
      dq.push_back(hi++);
    }
    while (dq.front() < p + 1) dq.pop_front();
    if (P[dq.front()] - P[p] >= -1) good.push_back(p);
  }
  if (good.size() != 2) throw Error(Errc::InvalidArgument, "forest rotation count is not 2");
  std::uniform_int_distribution<int> coin(0, 1);
  std::rotate(w.begin(), w.begin() + good[coin(rng)], w.end());

  NodeTree t;
  t.kids.push_back({-1, -1});
  t.colors.push_back(Color::White);
  struct Slot {
    int parent, side;
  };
  std::vector<Slot> stack{{0, 1}, {0, 0}};
  size_t p = 0;
  while (!stack.empty()) {
    Slot sl = stack.back();
    stack.pop_back();
    if (w[p++] < 0) continue;
    int b = static_cast<int>(t.kids.size());
    t.kids.push_back({-1, -1});
    t.colors.push_back(Color::Black);
    t.kids[sl.parent][sl.side] = b;
    int wh[2];
    for (int side = 0; side < 2; ++side) {
      wh[side] = static_cast<int>(t.kids.size());
      t.kids.push_back({-1, -1});
      t.colors.push_back(Color::White);
      t.kids[b][side] = wh[side];
    }
    for (int side = 1; side >= 0; --side) {
      stack.push_back({wh[side], 1});
      stack.push_back({wh[side], 0});
    }
  }
  return reroot_tree(node_tree_to_map(t), 0);
}

BigInt rank_composition_word(const std::vector<bool>& word) {
  long L = static_cast<long>(word.size()), k = 0;
  for (bool b : word) k += b;
  BigInt T = binomial(L, k), rank = 0;
  long r = L;
  for (bool b : word) {
    BigInt zeros = T * (r - k) / r;
    if (b) {
      rank += zeros;
      T = T * k / r;
      --k;
    } else {
      T = zeros;
    }
    --r;
  }
  return rank;
}

std::vector<bool> unrank_composition_word(int length, int ones, const BigInt& rank) {
  if (length < 0 || ones < 0 || ones > length) throw Error(Errc::InvalidArgument, "bad composition");
  BigInt T = binomial(length, ones);
  if (rank < 0 || rank >= T) throw Error(Errc::RankOutOfRange, "rank outside [0, C(length, ones))");
  std::vector<bool> word(length, false);
  BigInt rest = rank;
  long r = length, k = ones;
  for (int p = 0; p < length; ++p) {
    BigInt zeros = T * (r - k) / r;
    if (rest >= zeros) {
      word[p] = true;
      rest -= zeros;
      T = T * k / r;
      --k;
    } else {
      T = zeros;
    }
    --r;
  }
  return word;
}

bool is_triangulation_tree(const PlanarMap& tree) {
  if (!tree.has_colors()) throw Error(Errc::NotBicolored, "tree has no colors");
  for (int d = 0; d < tree.darts(); ++d)
    if (tree.is_stem(d) && tree.dart_color(d) == Color::Black) return false;
  return true;
}

}  // namespace pmaps
