#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "crosscut/cli.hpp"
#include "crosscut/io.hpp"

using namespace crosscut;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "crosscut_test_cli") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    io::write_text_file(path / name, text);
    return (path / name).string();
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("encode, decode and check-iso") {
  TempDir tmp;
  const auto g = tmp.file("g.json", R"({"vertices":2,"edges":[[0,1]]})");
  const auto h = tmp.file("h.json", R"({"vertices":2,"edges":[[1,0]]})");
  const auto e = tmp.file("e.json", R"({"vertices":2,"edges":[]})");

  const auto enc = run({"encode", "--graph", g, "--counts", "2,3,4,5", "-o", tmp / "s.json"});
  CHECK(enc.code == cli::kExitOk);
  CHECK(contains(enc.out, "size: 4"));
  CHECK(contains(enc.out, "counts: 2,3,4,5"));
  CHECK(io::read_json_file(tmp / "s.json")["size"] == 4);

  CHECK(run({"encode", "--graph", h, "-o", tmp / "t.json"}).code == 0);
  CHECK(run({"encode", "--graph", e, "-o", tmp / "u.json"}).code == 0);

  CHECK(run({"check-iso", tmp / "s.json", tmp / "s.json"}).code == cli::kExitOk);
  const auto iso = run({"check-iso", tmp / "s.json", tmp / "t.json"});
  CHECK(iso.code == cli::kExitOk);
  CHECK(contains(iso.out, "witness_valid: true"));
  CHECK(run({"check-iso", "--no-prune", tmp / "s.json", tmp / "t.json"}).code == cli::kExitOk);
  CHECK(run({"check-iso", tmp / "s.json", tmp / "u.json"}).code == cli::kExitNegative);

  const auto dec = run({"decode", "--structure", tmp / "s.json", "-o", tmp / "d.json"});
  CHECK(dec.code == cli::kExitOk);
  CHECK(io::graph_from_json(io::read_json_file(tmp / "d.json")).edges() == std::set<Edge>{{0, 1}});
}

TEST_CASE("roundtrip") {
  TempDir tmp;
  const auto g = tmp.file("g.json", R"({"vertices":3,"edges":[[0,1],[1,2],[2,0]]})");
  const auto one = run({"roundtrip", "--graph", g});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "verdict: pass"));

  const auto all = run({"roundtrip", "--exhaustive", "--max-vertices", "3"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "graphs: 64"));
  CHECK(contains(all.out, "failures: 0"));
  CHECK(run({"roundtrip", "--exhaustive", "--max-vertices", "9"}).code == cli::kExitUsage);
}

TEST_CASE("usage and input errors") {
  TempDir tmp;
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"decode", "--structure", tmp / "missing.json"}).code == cli::kExitUsage);
  const auto bad = tmp.file("bad.json", "{");
  CHECK(run({"check-iso", bad, bad}).code == cli::kExitUsage);
  const auto loop = tmp.file("loop.json", R"({"vertices":2,"edges":[[1,1]]})");
  const auto r = run({"encode", "--graph", loop});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  const auto g = tmp.file("g.json", R"({"vertices":2,"edges":[]})");
  CHECK(run({"encode", "--graph", g, "--counts", "2,2,3,4"}).code == cli::kExitUsage);
  CHECK(run({"respect", "--sigma", "0,0"}).code == cli::kExitUsage);
}

TEST_CASE("structure tools") {
  TempDir tmp;
  const auto blocks = run({"blocks", "--counts", "2,2,2,2,2,2"});
  CHECK(blocks.code == 0);
  CHECK(contains(blocks.out, "products: 2,4,8"));

  const auto u = tmp.file("u.json", io::to_json(full_pattern_structure(3)).dump());
  CHECK(run({"cb-reduct", "--structure", u, "-o", tmp / "cb.json"}).code == 0);
  const auto cross = run({"crosscut", "--structure", tmp / "cb.json"});
  CHECK(cross.code == 0);
  CHECK(run({"crosscut", "--structure", tmp / "cb.json", "--counts", "2,2,3"}).code == cli::kExitNegative);

  const auto full = tmp.file("full.json", io::to_json(build_full_branch_structure(
                                              ClassCounts::validate(std::vector<int>{2, 2, 2}, false))).dump());
  CHECK(run({"blocks", "--structure", full, "-o", tmp / "coarse.json"}).code == 0);
  const auto coarse = io::structure_from_json(io::read_json_file(tmp / "coarse.json"));
  CHECK(coarse.relation_count() == 2);
  CHECK(run({"crosscut", "--structure", tmp / "coarse.json", "--counts", "2,4"}).code == 0);

  const auto resp = run({"respect", "--sigma", "1,0,3,2", "--counts", "2,3,4,5", "-o", tmp / "g.txt"});
  CHECK(resp.code == 0);
  CHECK(contains(resp.out, "respect_thresholds: 0,0,2,2"));
  std::ifstream in(tmp / "g.txt");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  CHECK(io::group_element_from_text(text).perms().size() == 4);
}

TEST_CASE("reports are deterministic and carry their parameters") {
  TempDir tmp;
  const auto g = tmp.file("g.json", R"({"vertices":3,"edges":[[0,2]]})");
  const auto a = run({"encode", "--graph", g, "--json", "-o", tmp / "a.json"});
  const auto b = run({"encode", "--graph", g, "--json", "-o", tmp / "a.json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto plain = run({"encode", "--graph", g});
  CHECK(plain.out == run({"encode", "--graph", g}).out);
  CHECK(io::structure_from_json(io::Json::parse(plain.out)).size() == 5);
  const auto j = io::Json::parse(a.out);
  CHECK(j["counts"] == io::Json::parse("[3,4,5,6]"));
  CHECK(j["m"] == 4);
  CHECK(j["k"] == 3);
}

TEST_CASE("suite") {
  const auto s = run({"suite"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "verdict: pass"));
  CHECK(s.out == run({"suite"}).out);
}
