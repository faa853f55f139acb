#include "pmaps/codec.hpp"

#include <algorithm>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

namespace {

constexpr std::uint8_t kMagic[4] = {'P', '3', 'C', '1'};

void push_rank(std::vector<bool>& out, const BigInt& rank, unsigned bits) {
  for (unsigned b = bits; b-- > 0;) out.push_back(boost::multiprecision::bit_test(rank, b));
}

BigInt read_rank(const std::vector<bool>& in, size_t& pos, unsigned bits) {
  BigInt r = 0;
  for (unsigned b = 0; b < bits; ++b) {
    r <<= 1;
    if (in[pos++]) r |= 1;
  }
  return r;
}

std::vector<bool> to_bool(const std::string& letters, char one) {
  std::vector<bool> w;
  for (char c : letters) w.push_back(c == one);
  return w;
}

std::string from_bool(const std::vector<bool>& w, char one, char zero) {
  std::string s;
  for (bool b : w) s.push_back(b ? one : zero);
  return s;
}

// The outer-triangular map the tree encodes, canonically numbered.
PlanarMap map_of_tree(const PlanarMap& tree) {
  PlanarMap d = color_complete(close(tree).dissection.without_colors());
  int r = d.root_dart();
  if (d.dart_color(r) != Color::Black) d = d.with_root(d.phi(r));
  return canonical_relabel(primal_of_complete_dissection(d));
}

// Chord from the root vertex to the head of phi(root), closing a triangle
// with the first two outer darts. The root is kept.
PlanarMap add_outer_chord(const PlanarMap& g) {
  int r = g.root_dart(), f = g.phi(r);
  RawMap raw{g.alpha_vec(), g.sigma_vec()};
  int e = raw.add_dart(), e2 = raw.add_dart();
  raw.link(e, e2);
  raw.insert_after(g.sigma_inv(r), e);
  raw.insert_after(g.alpha(f), e2);
  return build_map(std::move(raw.alpha), std::move(raw.sigma), r);
}

PlanarMap remove_outer_chord(const PlanarMap& g) {
  int r = g.root_dart();
  int e2 = g.phi(g.phi(r)), e = g.alpha(e2);
  std::vector<int> id(g.darts(), -1);
  int k = 0;
  for (int x = 0; x < g.darts(); ++x)
    if (x != e && x != e2) id[x] = k++;
  std::vector<int> alpha(k), sigma(k);
  for (int x = 0; x < g.darts(); ++x) {
    if (id[x] < 0) continue;
    int s = g.sigma(x);
    while (s == e || s == e2) s = g.sigma(s);
    alpha[id[x]] = id[g.alpha(x)];
    sigma[id[x]] = id[s];
  }
  return build_map(std::move(alpha), std::move(sigma), id[r]);
}

PlanarMap tree_of_code(const CodeBits& c) {
  if (c.mode == CodeMode::Paren) {
    if (c.lengths.size() != 1 || c.lengths[0] < 6 || c.lengths[0] > (1u << 26))
      throw Error(Errc::MalformedHeader, "bad edge count");
    return paren_decode(c.payload, static_cast<int>(c.lengths[0] - 2));
  }
  if (c.lengths.size() != 2 || c.lengths[0] > (1u << 26) || c.lengths[1] > (1u << 26))
    throw Error(Errc::MalformedHeader, "bad node counts");
  long nb = static_cast<long>(c.lengths[0]), nw = static_cast<long>(c.lengths[1]);
  if (nb < 1) throw Error(Errc::MalformedHeader, "root class is empty");
  unsigned bb = ceil_log2(binomial(2 * nw + 1, nb)), wb = ceil_log2(binomial(2 * nb, nw));
  if (c.payload.size() < bb + wb) throw Error(Errc::UnbalancedWord, "payload too short");
  if (c.payload.size() > bb + wb) throw Error(Errc::TrailingBits, "payload too long");
  size_t pos = 0;
  BigInt rb = read_rank(c.payload, pos, bb), rw = read_rank(c.payload, pos, wb);
  TreeWord black{WordKind::Black, from_bool(unrank_composition_word(static_cast<int>(2 * nw + 1),
                                                                    static_cast<int>(nb), rb), 'N', 'L')};
  TreeWord white{WordKind::White, from_bool(unrank_composition_word(static_cast<int>(2 * nb),
                                                                    static_cast<int>(nw), rw), 'n', 'l')};
  return words_to_tree(black, white);
}

}  // namespace

std::uint64_t payload_length(CodeMode mode, const std::vector<std::uint64_t>& lengths) {
  if (mode == CodeMode::Paren) return lengths.empty() || lengths[0] < 2 ? 0 : 2 * (lengths[0] - 2);
  long nb = static_cast<long>(lengths.at(0)), nw = static_cast<long>(lengths.at(1));
  return ceil_log2(binomial(2 * nw + 1, nb)) + ceil_log2(binomial(2 * nb, nw));
}

CodeBits encode(const PlanarMap& g0, CodeMode mode) {
  g0.root_dart();
  if (g0.num_stems() != 0) throw Error(Errc::NotPlanarMap, "map has stems");
  if (g0.num_edges() < 6) throw Error(Errc::TooSmall, "3-connected maps have at least 6 edges");
  PlanarMap g = canonical_relabel(g0);
  CodeBits c;
  c.mode = mode;
  int od = g.face_degree(g.outer_face());
  if (od < 3) throw Error(Errc::NotPlanarMap, "outer face of degree < 3");
  if (od > 3) {
    g = add_outer_chord(g);
    c.edge_added = true;
  }

  PlanarMap d = complete_dissection_of_map(g);
  PlanarMap tree = open(d, triorient_minimal(d));
  int stem = -1;
  for (int x = 0; x < tree.darts() && stem < 0; ++x)
    if (tree.is_stem(x)) stem = x;
  tree = reroot_tree(tree, stem);

  if (mode == CodeMode::Paren) {
    c.lengths = {static_cast<std::uint64_t>(g.num_edges())};
    c.payload = paren_encode(tree);
  } else {
    // The color class of the root node plays the black role in the words.
    if (tree.dart_color(tree.root_dart()) == Color::White) {
      std::vector<Color> col(tree.colors());
      for (auto& x : col) x = flip(x);
      tree = tree.with_colors(std::move(col));
    }
    WordTriple w = tree_to_words(tree);
    long nb = 0, nw = 0;
    for (int v = 0; v < tree.num_vertices(); ++v) {
      if (tree.vertex_degree(v) != 3) continue;
      (tree.color(v) == Color::Black ? nb : nw)++;
    }
    c.lengths = {static_cast<std::uint64_t>(nb), static_cast<std::uint64_t>(nw)};
    push_rank(c.payload, rank_composition_word(to_bool(w.black.letters, 'N')),
              ceil_log2(binomial(2 * nw + 1, nb)));
    push_rank(c.payload, rank_composition_word(to_bool(w.white.letters, 'n')),
              ceil_log2(binomial(2 * nb, nw)));
  }
  if (c.payload.size() != payload_length(mode, c.lengths))
    throw Error(Errc::InvalidArgument, "payload length does not match its formula");

  // Root restoration: index of the root in the canonical numbering of the decoded map.
  PlanarMap dec = map_of_tree(tree_of_code(c));
  const int root = g.root_dart();
  int found = -1;
  for (int x = 0; x < dec.darts() && found < 0; ++x) {
    if (dec.vertex_degree(dec.vertex(x)) != g.vertex_degree(g.vertex(root))) continue;
    if (dec.face_degree(dec.face(x)) != g.face_degree(g.face(root))) continue;
    if (rooted_equal(dec, x, g, root)) found = x;
  }
  if (found < 0) throw Error(Errc::NotPlanarMap, "map is not 3-connected");
  c.root_bits = ceil_log2(BigInt(dec.darts()));
  c.root_index = static_cast<std::uint64_t>(found);
  return c;
}

PlanarMap decode(const CodeBits& c) {
  if (c.version != 1) throw Error(Errc::MalformedHeader, "unsupported version");
  PlanarMap g = map_of_tree(tree_of_code(c));
  if (c.root_bits != ceil_log2(BigInt(g.darts())))
    throw Error(Errc::MalformedHeader, "root index width does not match the map");
  if (c.root_index >= static_cast<std::uint64_t>(g.darts()))
    throw Error(Errc::BadRootIndex, "root index beyond the dart count");
  g = g.with_root(static_cast<int>(c.root_index));
  if (c.edge_added) g = remove_outer_chord(g);
  return canonical_relabel(g);
}

namespace {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  do {
    std::uint8_t b = v & 0x7f;
    v >>= 7;
    out.push_back(v ? (b | 0x80) : b);
  } while (v);
}

std::uint64_t get_varint(const std::vector<std::uint8_t>& in, size_t& pos) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (pos >= in.size()) throw Error(Errc::MalformedHeader, "truncated length");
    std::uint8_t b = in[pos++];
    v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
  }
  throw Error(Errc::MalformedHeader, "length varint too long");
}

}  // namespace

std::vector<std::uint8_t> to_bytes(const CodeBits& c) {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>((c.version & 0xf) << 4 | (c.mode == CodeMode::Parametric) << 3 |
                                          c.edge_added << 2));
  for (auto v : c.lengths) put_varint(out, v);
  std::vector<bool> bits = c.payload;
  for (unsigned b = c.root_bits; b-- > 0;) bits.push_back((c.root_index >> b) & 1);
  for (size_t i = 0; i < bits.size(); i += 8) {
    std::uint8_t byte = 0;
    for (size_t k = 0; k < 8; ++k) byte = static_cast<std::uint8_t>(byte << 1 | (i + k < bits.size() && bits[i + k]));
    out.push_back(byte);
  }
  return out;
}

CodeBits from_bytes(const std::vector<std::uint8_t>& in) {
  if (in.empty()) throw Error(Errc::MalformedHeader, "empty record");
  CodeBits c;
  std::uint8_t h = in[0];
  c.version = h >> 4;
  if (c.version != 1) throw Error(Errc::MalformedHeader, "unsupported version");
  if (h & 0x3) throw Error(Errc::MalformedHeader, "reserved header bits set");
  c.mode = (h & 0x8) ? CodeMode::Parametric : CodeMode::Paren;
  c.edge_added = h & 0x4;
  size_t pos = 1;
  c.lengths.push_back(get_varint(in, pos));
  if (c.mode == CodeMode::Parametric) c.lengths.push_back(get_varint(in, pos));
  if (c.mode == CodeMode::Paren && (c.lengths[0] < 6 || c.lengths[0] > (1u << 26)))
    throw Error(Errc::MalformedHeader, "bad edge count");
  if (c.mode == CodeMode::Parametric && (c.lengths[0] > (1u << 26) || c.lengths[1] > (1u << 26)))
    throw Error(Errc::MalformedHeader, "bad node counts");
  std::uint64_t plen = payload_length(c.mode, c.lengths);
  std::uint64_t edges = c.mode == CodeMode::Paren ? c.lengths[0] : c.lengths[0] + c.lengths[1] + 2;
  c.root_bits = ceil_log2(BigInt(2 * edges));
  std::uint64_t avail = 8 * static_cast<std::uint64_t>(in.size() - pos);
  auto bit = [&](std::uint64_t i) { return (in[pos + i / 8] >> (7 - i % 8)) & 1; };
  if (avail < plen) throw Error(Errc::UnbalancedWord, "payload truncated");
  for (std::uint64_t i = 0; i < plen; ++i) c.payload.push_back(bit(i));
  if (avail < plen + c.root_bits) throw Error(Errc::BadRootIndex, "root index truncated");
  for (unsigned b = 0; b < c.root_bits; ++b) c.root_index = c.root_index << 1 | bit(plen + b);
  if (avail - plen - c.root_bits >= 8) throw Error(Errc::TrailingBits, "bytes after the record");
  return c;
}

std::vector<std::uint8_t> write_p3c(const CodeBits& c) {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  auto body = to_bytes(c);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

CodeBits read_p3c(const std::vector<std::uint8_t>& in) {
  if (in.size() < 4 || !std::equal(kMagic, kMagic + 4, in.begin()))
    throw Error(Errc::MalformedHeader, "missing P3C1 magic");
  return from_bytes(std::vector<std::uint8_t>(in.begin() + 4, in.end()));
}

CodeLengthReport code_length_report(const PlanarMap& g, CodeMode mode) {
  CodeBits c = encode(g, mode);
  CodeLengthReport r;
  r.edges = g.num_edges();
  r.payload_bits = c.payload.size();
  r.root_bits = c.root_bits;
  r.bits_total = 8 * to_bytes(c).size();
  r.framing_bits = r.bits_total - r.payload_bits - r.root_bits;
  r.bits_per_edge = static_cast<double>(r.bits_total) / r.edges;
  return r;
}

}  // namespace pmaps
