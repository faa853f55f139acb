#include <catch_amalgamated.hpp>

#include "pmaps/codec.hpp"
#include "pmaps/count.hpp"
#include "pmaps/oracle.hpp"
#include "pmaps/sample.hpp"
#include "support.hpp"

using namespace pmaps;
using namespace pmaps::testing;

namespace {

Errc error_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

bool round_trips(const PlanarMap& g, CodeMode mode) {
  PlanarMap back = decode(encode(g, mode));
  return rooted_equal(back, back.root_dart(), g, g.root_dart());
}

}  // namespace

TEST_CASE("tetrahedron code") {
  CodeBits c = encode(tetrahedron());
  CHECK(c.payload.size() == 8);
  CHECK_FALSE(c.edge_added);
  CHECK(c.lengths == std::vector<std::uint64_t>{6});
  CHECK(c.root_bits == 4);
  CHECK(payload_length(CodeMode::Paren, c.lengths) == 8);
  CHECK(round_trips(tetrahedron(), CodeMode::Paren));
  CHECK(round_trips(tetrahedron(), CodeMode::Parametric));
}

TEST_CASE("quadrangular outer face sets the flag") {
  PlanarMap g = cube();
  CodeBits c = encode(g);
  CHECK(c.edge_added);
  CHECK(c.payload.size() == 2 * (g.num_edges() + 1 - 2));
  CHECK(round_trips(g, CodeMode::Paren));
  CHECK(round_trips(g, CodeMode::Parametric));
}

TEST_CASE("every small 3-connected map round trips in both modes") {
  for (int e = 6; e <= 10; ++e)
    for (const auto& m : enumerate_3connected(e))
      for (int d = 0; d < m.darts(); ++d) {
        PlanarMap g = m.with_root(d);
        CHECK(round_trips(g, CodeMode::Paren));
        CHECK(round_trips(g, CodeMode::Parametric));
      }
}

TEST_CASE("equal rooted maps give equal codes") {
  PlanarMap t = tetrahedron();
  PlanarMap relabeled = canonical_relabel(t.with_root(5));
  CHECK(encode(relabeled) == encode(t.with_root(5)));
}

TEST_CASE("byte framing round trips") {
  Rng rng(8);
  for (int n : {6, 20, 50}) {
    PlanarMap g = sample_3connected_by_edges(n, rng).map;
    for (CodeMode mode : {CodeMode::Paren, CodeMode::Parametric}) {
      CodeBits c = encode(g, mode);
      CHECK(from_bytes(to_bytes(c)) == c);
      auto file = write_p3c(c);
      CHECK(std::string(file.begin(), file.begin() + 4) == "P3C1");
      CHECK(read_p3c(file) == c);
      CHECK(c.payload.size() == payload_length(mode, c.lengths));
    }
  }
}

TEST_CASE("header layout") {
  CodeBits c = encode(tetrahedron(), CodeMode::Parametric);
  auto bytes = to_bytes(c);
  CHECK(bytes[0] == ((1 << 4) | (1 << 3)));
  CodeBits f = encode(cube());
  CHECK(to_bytes(f)[0] == ((1 << 4) | (1 << 2)));
}

TEST_CASE("malformed records are rejected") {
  Rng rng(3);
  PlanarMap g = sample_3connected_by_edges(40, rng).map;
  CodeBits c = encode(g);
  auto bytes = to_bytes(c);

  auto cut = bytes;
  cut.resize(bytes.size() - 4);
  CHECK(error_of([&] { from_bytes(cut); }) == Errc::UnbalancedWord);

  auto longer = bytes;
  longer.push_back(0xff);
  CHECK(error_of([&] { from_bytes(longer); }) == Errc::TrailingBits);

  auto bad_version = bytes;
  bad_version[0] = 0x20;
  CHECK(error_of([&] { from_bytes(bad_version); }) == Errc::MalformedHeader);
  auto reserved = bytes;
  reserved[0] |= 1;
  CHECK(error_of([&] { from_bytes(reserved); }) == Errc::MalformedHeader);
  CHECK(error_of([&] { from_bytes({}); }) == Errc::MalformedHeader);
  CHECK(error_of([&] { read_p3c({'P', '3', 'C', '2', 0x10}); }) == Errc::MalformedHeader);

  CodeBits root = c;
  root.root_index = 2 * static_cast<std::uint64_t>(g.num_edges() + c.edge_added);
  CHECK(error_of([&] { decode(root); }) == Errc::BadRootIndex);

  CodeBits flipped = c;
  flipped.payload[0] = !flipped.payload[0];
  CHECK(error_of([&] { decode(flipped); }) == Errc::UnbalancedWord);

  CHECK(error_of([&] { encode(path3()); }) == Errc::TooSmall);
}

TEST_CASE("code length report") {
  CodeLengthReport t = code_length_report(tetrahedron());
  CHECK(t.payload_bits == 8);
  CHECK(t.edges == 6);
  CHECK(t.bits_total == t.payload_bits + t.root_bits + t.framing_bits);
  Rng rng(100);
  for (int k = 0; k < 20; ++k) {
    PlanarMap g = sample_3connected_by_edges(100, rng).map;
    CodeLengthReport r = code_length_report(g);
    CHECK(r.bits_per_edge < 2.35);
    CHECK(r.bits_per_edge <= 2.0 + double(r.framing_bits + r.root_bits) / r.edges + 1e-9);
  }
}

TEST_CASE("parametric payload uses the enumerative bound") {
  Rng rng(6);
  for (int n : {5, 10, 20}) {
    PlanarMap g = sample_rooted_triangulation(n, rng);
    CodeBits p = encode(g, CodeMode::Parametric), q = encode(g, CodeMode::Paren);
    REQUIRE(p.lengths.size() == 2);
    long nb = static_cast<long>(p.lengths[0]), nw = static_cast<long>(p.lengths[1]);
    CHECK(p.payload.size() == ceil_log2(binomial(2 * nw + 1, nb)) + ceil_log2(binomial(2 * nb, nw)));
    CHECK(p.payload.size() < q.payload.size());
  }
}
