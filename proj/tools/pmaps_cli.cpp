#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/codec.hpp"
#include "pmaps/count.hpp"
#include "pmaps/oracle.hpp"
#include "pmaps/orient.hpp"
#include "pmaps/render.hpp"
#include "pmaps/sample.hpp"

using namespace pmaps;

namespace {

struct Io {
  std::string in, out;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
  f << data;
}

std::vector<PlanarMap> read_maps(const std::string& path) {
  std::istringstream is(read_all(path));
  auto maps = read_pmap_stream(is);
  if (maps.empty()) throw Error(Errc::ParseError, "no pmap block in input");
  return maps;
}

std::string blocks(const std::vector<PlanarMap>& maps) {
  std::string out;
  for (size_t k = 0; k < maps.size(); ++k) {
    if (k) out += '\n';
    out += to_pmap(maps[k]);
  }
  return out;
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar map closure, sampling and coding toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  std::string format = "pmap";
  app.add_option("--seed", seed, "Seed for every random choice (mt19937_64 streams)");
  app.add_option("--format", format, "Map stream format for sample output")->check(CLI::IsMember({"pmap", "p3c"}));

  // count
  auto* count = app.add_subcommand("count", "Exact class sizes, one decimal per line");
  std::string count_kind = "dissections";
  int n = -1, upto = -1;
  std::vector<int> ij;
  for (const char* k : {"trees", "dissections", "p3c", "triangulations", "unrooted-triangulations",
                        "black-rooted"}) {
    count->add_flag_callback(std::string("--") + k, [&count_kind, k] { count_kind = k; },
                             std::string("Count ") + k);
  }
  count->add_option("--n", n, "Size (nodes, inner vertices or edges)");
  count->add_option("--upto", upto, "Print sizes 0..upto");
  count->add_option("--ij", ij, "Bicolored sizes i j")->expected(2);

  // series
  auto* series = app.add_subcommand("series", "Series coefficients as 'n coefficient' lines");
  std::string series_kind = "p3c";
  int order = 20;
  series->add_option("--kind", series_kind, "trees|dissections|p3c|undecomposable")
      ->check(CLI::IsMember({"trees", "dissections", "p3c", "undecomposable"}));
  series->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 4096));

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform rooted maps as pmap blocks");
  int edges = -1, tri = -1, jobs = 1;
  long how_many = 1;
  std::vector<int> sample_ij;
  Io sample_io;
  auto* opt_edges = sample->add_option("--edges", edges, "3-connected maps with this many edges");
  auto* opt_ij = sample->add_option("--ij", sample_ij, "3-connected maps with i vertices and j faces")->expected(2);
  auto* opt_tri = sample->add_option("--tri", tri, "Triangulations with this many inner vertices");
  opt_edges->excludes(opt_ij)->excludes(opt_tri);
  opt_ij->excludes(opt_tri);
  sample->add_option("--count", how_many, "Number of maps")->check(CLI::NonNegativeNumber);
  sample->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sample->add_option("--out", sample_io.out, "Output file");

  // encode / decode
  auto* encode_cmd = app.add_subcommand("encode", "pmap block to a .p3c record");
  Io enc_io;
  std::string mode = "paren";
  encode_cmd->add_option("--in", enc_io.in, "Input pmap (default stdin)");
  encode_cmd->add_option("--out", enc_io.out, "Output .p3c (default stdout)");
  encode_cmd->add_option("--mode", mode, "paren|parametric")->check(CLI::IsMember({"paren", "parametric"}));
  bool report = false;
  encode_cmd->add_flag("--report", report, "Print code lengths to stderr");
  auto* decode_cmd = app.add_subcommand("decode", ".p3c record to a canonical pmap block");
  Io dec_io;
  decode_cmd->add_option("--in", dec_io.in, "Input .p3c (default stdin)");
  decode_cmd->add_option("--out", dec_io.out, "Output pmap (default stdout)");

  // orient
  auto* orient = app.add_subcommand("orient", "Minimal orientation of an outer-triangular map or a dissection");
  Io or_io;
  orient->add_option("--in", or_io.in, "Input pmap (default stdin)");
  orient->add_option("--out", or_io.out, "Output (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Structural checks; nonzero exit when any report is non-empty");
  Io ver_io;
  verify->add_option("--in", ver_io.in, "Input pmap stream (default stdin)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive small classes as pmap blocks");
  std::string enum_kind = "tree";
  int enum_n = 1;
  bool enum_rooted = false;
  Io enum_io;
  enumerate->add_option("--kind", enum_kind, "tree (n<=8) | dissection (n<=6) | p3c-map (edges 6..10) | triangulation (n<=3)")
      ->check(CLI::IsMember({"tree", "dissection", "p3c-map", "triangulation"}));
  enumerate->add_option("--n", enum_n, "Size")->required();
  enumerate->add_flag("--rooted", enum_rooted, "Trees and dissections: one block per rooted class");
  enumerate->add_option("--out", enum_io.out, "Output file");

  // convert
  auto* convert = app.add_subcommand("convert", "Apply one bijection to every map of a pmap stream");
  std::string to = "canonical";
  Io conv_io;
  convert->add_option("--to", to,
                      "canonical | quadrangulation | primal | complete-dissection | outer-primal | "
                      "complete | close | open | iota | pi | word")
      ->check(CLI::IsMember({"canonical", "quadrangulation", "primal", "complete-dissection", "outer-primal",
                             "complete", "close", "open", "iota", "pi", "word"}));
  convert->add_option("--in", conv_io.in, "Input pmap stream (default stdin)");
  convert->add_option("--out", conv_io.out, "Output (default stdout)");

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of the first map (barycentric layout)");
  Io ren_io;
  bool labels = false;
  render->add_option("--in", ren_io.in, "Input pmap (default stdin)");
  render->add_option("--out", ren_io.out, "Output SVG (default stdout)");
  render->add_flag("--labels", labels, "Write vertex ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*count) {
      auto one = [&](int k) -> BigInt {
        if (count_kind == "trees") return count_rooted_trees(k);
        if (count_kind == "dissections") return count_rooted_dissections(k);
        if (count_kind == "p3c") return count_rooted_3connected(k);
        if (count_kind == "triangulations") return count_rooted_triangulations(k);
        if (count_kind == "unrooted-triangulations") return count_unrooted_triangulations(k);
        throw CLI::ValidationError("--n", "this kind needs --ij");
      };
      if (!ij.empty()) {
        BigInt v = count_kind == "dissections"    ? count_rooted_dissections_ij(ij[0], ij[1])
                   : count_kind == "p3c"          ? count_rooted_3connected_ij(ij[0], ij[1])
                   : count_kind == "black-rooted" ? count_black_rooted(ij[0], ij[1])
                                                  : throw CLI::ValidationError("--ij", "kind has no bicolored count");
        std::cout << str(v) << "\n";
      } else if (upto >= 0) {
        for (int k = 0; k <= upto; ++k) std::cout << str(one(k)) << "\n";
      } else if (n >= 0) {
        std::cout << str(one(n)) << "\n";
      } else {
        throw CLI::ValidationError("count", "give --n, --upto or --ij");
      }
    } else if (*series) {
      Series s;
      if (series_kind == "trees") s = series_binary_trees(order);
      else if (series_kind == "dissections") s = series_dissections(order);
      else if (series_kind == "p3c") s = series_3connected(order);
      else s = series_undecomposable(order);
      for (size_t k = 0; k < s.size(); ++k) std::cout << k << ' ' << str(s[k]) << "\n";
    } else if (*sample) {
      SampleRequest req;
      req.count = how_many;
      req.seed = seed;
      req.jobs = jobs;
      if (*opt_edges) {
        req.kind = SampleKind::ByEdges;
        req.a = edges;
      } else if (*opt_ij) {
        req.kind = SampleKind::ByIJ;
        req.a = sample_ij[0];
        req.b = sample_ij[1];
      } else if (*opt_tri) {
        req.kind = SampleKind::Triangulation;
        req.a = tri;
      } else {
        throw CLI::ValidationError("sample", "give --edges, --ij or --tri");
      }
      if (format == "p3c" && how_many != 1) throw CLI::ValidationError("--format", "p3c holds a single map");
      SampleBatch batch = sample_batch(req);
      if (format == "p3c") {
        auto bytes = write_p3c(encode(batch.maps.front()));
        write_all(sample_io.out, std::string(bytes.begin(), bytes.end()));
      } else {
        std::ostringstream os;
        os << blocks(batch.maps);
        const SampleStats& st = batch.stats;
        os << "\n# rng mt19937_64 seed " << seed << " streams per sample index\n"
           << "# trials " << st.trials << " rejections " << st.rejections << " success_rate "
           << st.success_rate() << "\n";
        write_all(sample_io.out, os.str());
        // timings vary run to run, so they stay out of the map stream
        std::cerr << "# seconds tree " << st.tree_seconds << " closure " << st.closure_seconds << " test "
                  << st.test_seconds << " finish " << st.finish_seconds << "\n";
      }
    } else if (*encode_cmd) {
      PlanarMap g = read_maps(enc_io.in).front();
      CodeMode m = mode == "paren" ? CodeMode::Paren : CodeMode::Parametric;
      auto bytes = write_p3c(encode(g, m));
      write_all(enc_io.out, std::string(bytes.begin(), bytes.end()));
      if (report) {
        auto r = code_length_report(g, m);
        std::cerr << "edges " << r.edges << " payload " << r.payload_bits << " root " << r.root_bits
                  << " framing " << r.framing_bits << " total " << r.bits_total << " bits_per_edge "
                  << r.bits_per_edge << "\n";
      }
    } else if (*decode_cmd) {
      std::string data = read_all(dec_io.in);
      PlanarMap g = decode(read_p3c(std::vector<std::uint8_t>(data.begin(), data.end())));
      write_all(dec_io.out, to_pmap(g));
    } else if (*orient) {
      PlanarMap g = read_maps(or_io.in).front();
      std::ostringstream os;
      if (classify(g) == MapClass::HexDissection) {
        TriOrientation o = triorient_minimal(g);
        os << "# tri-orientation: per dart +1 out, -1 in, 0 on the hexagon\ndir";
        for (int v : o.dir) os << ' ' << v;
        os << "\n";
      } else {
        Alpha0Orientation x = minimal_alpha0(g);
        os << "# minimal alpha0-orientation; outer a1 " << x.outer.a1 << " a2 " << x.outer.a2 << " a3 "
           << x.outer.a3 << "\nlabel";
        for (int v : x.label) os << ' ' << v;
        os << "\nprimal_out";
        for (char v : x.primal_out) os << ' ' << int(v);
        os << "\ndual_out";
        for (char v : x.dual_out) os << ' ' << int(v);
        os << "\n# pointer moves " << x.pointer_moves << " steps " << x.steps << "\n";
      }
      write_all(or_io.out, os.str());
    } else if (*verify) {
      int failures = 0, k = 0;
      for (const PlanarMap& g : read_maps(ver_io.in)) {
        std::vector<std::string> issues;
        MapClass c = classify(g);
        switch (c) {
          case MapClass::HexDissection: {
            if (has_separating_4cycle(g)) issues.push_back("separating 4-cycle");
            else {
              TriReport r = verify_triorientation(g, triorient_minimal(g));
              issues.insert(issues.end(), r.issues.begin(), r.issues.end());
            }
            break;
          }
          case MapClass::OuterTriangular: {
            if (!g.rooted()) {
              issues.push_back("outer-triangular map needs a root");
              break;
            }
            Alpha0Orientation x = minimal_alpha0(g);
            Alpha0Report r = verify_alpha0(g, derived_map(g), x);
            issues.insert(issues.end(), r.issues.begin(), r.issues.end());
            if (x.pointer_moves > 2L * g.num_edges()) issues.push_back("pointer moves exceed 2E");
            break;
          }
          case MapClass::Quadrangulation:
            if (has_separating_4cycle(g)) issues.push_back("separating 4-cycle");
            break;
          case MapClass::BinaryTreeMap:
            break;
          case MapClass::Other:
            if (g.num_stems() == 0 && g.num_edges() <= 200 && !is_3_connected(g)) issues.push_back("not 3-connected");
            break;
        }
        std::cout << "map " << k++ << ' ' << map_class_name(c) << (issues.empty() ? " ok" : " FAIL") << "\n";
        for (const auto& s : issues) std::cout << "  " << s << "\n";
        failures += !issues.empty();
      }
      return failures ? 1 : 0;
    } else if (*enumerate) {
      std::vector<PlanarMap> maps;
      if (enum_kind == "tree") {
        TreeFamily f = enumerate_binary_trees(enum_n);
        maps = enum_rooted ? f.rooted : f.unrooted;
      } else if (enum_kind == "dissection") {
        maps = enumerate_dissections(enum_n);
        if (enum_rooted) maps = all_rootings(maps, true);
      } else if (enum_kind == "p3c-map") {
        maps = enumerate_3connected(enum_n);
      } else {
        maps = enumerate_triangulations(enum_n);
      }
      write_all(enum_io.out, blocks(maps) + "\n# " + std::to_string(maps.size()) + " maps\n");
    } else if (*convert) {
      std::string out;
      for (const PlanarMap& g : read_maps(conv_io.in)) {
        if (!out.empty()) out += '\n';
        if (to == "word") {
          out += format_decomposition_word(decomposition_word(g)) + "\n";
          continue;
        }
        PlanarMap r;
        if (to == "canonical") r = canonical_relabel(g);
        else if (to == "quadrangulation") r = quadrangulation_of_map(g);
        else if (to == "primal") r = primal_of_quadrangulation(g);
        else if (to == "complete-dissection") r = complete_dissection_of_map(g);
        else if (to == "outer-primal") r = primal_of_complete_dissection(g);
        else if (to == "complete") r = complete_dissection(g.has_colors() ? g : bicolor(g, g.vertex(g.root_dart()), Color::Black));
        else if (to == "close") r = close(g).dissection;
        else if (to == "open") r = open(g, triorient_minimal(g));
        else if (to == "iota") r = iota(g);
        else r = pi(g);
        out += to_pmap(r);
      }
      write_all(conv_io.out, out);
    } else if (*render) {
      RenderOptions opt;
      opt.labels = labels;
      write_all(ren_io.out, render_svg(read_maps(ren_io.in).front(), opt));
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
