#include "doctest.h"
#include "phcalc/cli.hpp"
#include "phcalc/formats.hpp"
#include "phcalc/generator.hpp"
#include "phcalc/oracle.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace phcalc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "phcalc");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDiabolo = PHCALC_DATA_DIR "/diabolo.txt";
const std::string kFiltration = PHCALC_DATA_DIR "/diabolo_filtration.json";

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("betti") {
  CHECK(run({"betti", kDiabolo, "0"}).out == "1\n");
  CHECK(run({"betti", kDiabolo, "1"}).out == "1\n");
  CHECK(run({"betti", kDiabolo, "2"}).out == "0\n");
  CHECK(run({"betti", "-", "0"}, "0\n1\n2\n").out == "3\n");
  const auto empty = run({"betti", "-", "0"}, "# empty\n");
  CHECK(empty.code == cli::kOk);
  CHECK(empty.out == "0\n");
}

TEST_CASE("pbetti and mu") {
  CHECK(run({"pbetti", kFiltration, "0", "0", "4"}).out == "1\n");
  CHECK(run({"pbetti", kFiltration, "0", "0", "0"}).out == "3\n");
  CHECK(run({"pbetti", kFiltration, "1", "3", "5"}).out == "1\n");
  CHECK(run({"mu", kFiltration, "0", "0", "1"}).out == "2\n");
  CHECK(run({"mu", kFiltration, "0", "2", "4"}).out == "1\n");
  CHECK(run({"mu", kFiltration, "1", "3", "inf"}).out == "1\n");
  CHECK(run({"mu", kFiltration, "0", "0", "inf"}).out == "1\n");

  const auto bad = run({"pbetti", kFiltration, "0", "3", "2"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("0 <= j <= p <= 5") != std::string::npos);
  CHECK(run({"mu", kFiltration, "0", "2", "2"}).code == cli::kUsage);
  CHECK(run({"mu", kFiltration, "0", "0", "never"}).code == cli::kUsage);
  CHECK(run({"mu", kFiltration, "0", "6", "inf"}).code == cli::kUsage);
}

TEST_CASE("barcode formats") {
  const auto text = run({"barcode", kFiltration, "--dim", "1"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("[3,inf)              *----------->") != std::string::npos);

  const auto all = run({"barcode", kFiltration});
  CHECK(all.out.find("H0 barcode") != std::string::npos);
  CHECK(all.out.find("H2 barcode") != std::string::npos);

  const auto json = run({"barcode", kFiltration, "--format", "json", "--jobs", "2"});
  const auto doc = formats::parse_barcodes(json.out);
  CHECK(doc.last_level == 5);
  REQUIRE(doc.barcodes.size() == 3);
  CHECK(doc.barcodes[1].pairs.size() == 2);

  CHECK(run({"barcode", kFiltration, "--format", "svg"}).out.rfind("<svg", 0) == 0);
  CHECK(run({"barcode", kFiltration, "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"barcode", kFiltration, "--dim", "1", "--all-dims"}).code == cli::kUsage);
}

TEST_CASE("incremental input") {
  const std::string text = R"({"levels": [[[0],[1],[2]], [[0,1],[1,2],[0,2]], [[3],[4],[5]],
    [[3,4],[4,5],[3,5]], [[2,3]], [[0,1,2]]]})";
  CHECK(run({"pbetti", "-", "1", "3", "5", "--incremental"}, text).out == "1\n");
  CHECK(run({"pbetti", "-", "1", "3", "5"}, text).code == cli::kValidation);
}

TEST_CASE("check") {
  const auto ok = run({"check", kFiltration, "--oracle"});
  CHECK(ok.code == cli::kOk);
  CHECK(nlohmann::json::parse(ok.out)["ok"] == true);

  const auto bad = run({"check", "-"}, R"({"levels": [[[0, 1]], [[2]]]})");
  CHECK(bad.code == cli::kValidation);
  const auto report = nlohmann::json::parse(bad.out);
  CHECK(report["ok"] == false);
  CHECK(report["validation"]["level"] == 1);
}

TEST_CASE("input errors") {
  CHECK(run({"betti", "/nonexistent/file", "0"}).code == cli::kUsage);
  const auto parse = run({"betti", "-", "0"}, "0 1\nq\n");
  CHECK(parse.code == cli::kUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);
  const auto json = run({"pbetti", "-", "0", "0", "0"}, R"({"levels": [[[0, "a"]]]})");
  CHECK(json.code == cli::kUsage);
  CHECK(json.err.find("levels[0][0][1]") != std::string::npos);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("gen") {
  const auto a = run({"gen", "--triangles", "10", "--levels", "5", "--seed", "42"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == run({"gen", "--triangles", "10", "--levels", "5", "--seed", "42"}).out);
  const auto file = formats::parse_filtration(a.out);
  CHECK(file.name == std::optional<std::string>("random-T10-L5-V12-seed42"));
  CHECK(file.levels.size() == 5);
  CHECK(run({"check", "-", "--oracle"}, a.out).code == cli::kOk);

  const auto path = temp_file("phcalc_gen_test.json", "");
  CHECK(run({"gen", "--triangles", "3", "--levels", "2", "--seed", "1", "-o", path.string()}).code ==
        cli::kOk);
  std::ifstream in(path);
  CHECK(formats::parse_filtration(in).levels.size() == 2);
  std::filesystem::remove(path);

  CHECK(run({"gen", "--triangles", "0", "--levels", "5", "--seed", "1"}).code == cli::kUsage);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--triangles", "10,20", "--levels", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("Betti") != std::string::npos);
  CHECK(r.out.find("Persistent Betti") != std::string::npos);
}

TEST_CASE("structured barcodes span the enumerated persistent Betti numbers") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::string text = formats::serialize_filtration(generate_filtration({6, 4, 6, seed}));
    const auto r = run({"barcode", "-", "--format", "json"}, text);
    REQUIRE(r.code == cli::kOk);
    const auto doc = formats::parse_barcodes(r.out);
    const Filtration f = formats::to_filtration(formats::parse_filtration(text));
    for (const auto& b : doc.barcodes) {
      for (std::size_t k = 0; k <= doc.last_level; ++k) {
        for (std::size_t l = k; l <= doc.last_level; ++l) {
          REQUIRE(oracle::within_bounds(f, b.dimension, k, l));
          CHECK(b.spanning_count(k, l) == oracle::oracle_persistent_betti(f, b.dimension, k, l));
        }
      }
    }
  }
}
