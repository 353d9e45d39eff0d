#include "cli/app.hpp"
#include "cli/matrix_document.hpp"
#include "cli/report.hpp"

#include "bott/enumerate.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bott::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bott");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("bott_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt")) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(MatrixDocument, ParsesFileFormatWithComments) {
  const auto doc = parse_matrix_text("# Klein bottle\n0 1   # first row\n\n0 0\n");
  EXPECT_EQ(doc.matrix, testing::klein_bottle());
}

TEST(MatrixDocument, RejectsMalformedInput) {
  EXPECT_THROW(parse_matrix_text("1 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse_matrix_text("0 0\n1 0\n"), ParseError);
  EXPECT_THROW(parse_matrix_text("0 2\n0 0\n"), ParseError);
  EXPECT_THROW(parse_matrix_text("0 1 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse_matrix_text("0 x\n0 0\n"), ParseError);
  EXPECT_THROW(parse_matrix_text("# nothing\n"), ParseError);
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.txt"), ParseError);
}

TEST(MatrixDocument, InlineForms) {
  EXPECT_EQ(parse_inline_matrix("0110;0011;0000;0000").matrix, testing::orientable_not_symplectic_4x4());
  EXPECT_EQ(parse_inline_matrix("0 1; 0 0").matrix, testing::klein_bottle());
  EXPECT_THROW(parse_inline_matrix("01;10"), ParseError);
}

TEST(MatrixDocument, ListedMatricesRoundTrip) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate::list_symplectic(n)) {
      EXPECT_EQ(parse_matrix_text(format_matrix(a)).matrix, a);
      EXPECT_EQ(parse_inline_matrix(a.to_compact_string()).matrix, a);
    }
  }
}

TEST(Check, KleinBottle) {
  TempFile file("0 1\n0 0\n");
  const auto j = run_json({"check", file.path()});
  EXPECT_EQ(j["orientable"], false);
  EXPECT_EQ(j["symplectic"], false);
  EXPECT_EQ(j["flux_rank"], 1);
  EXPECT_TRUE(j["pairing"].is_null());
}

TEST(Check, ExampleMatrices) {
  const auto bad = run_json({"check", "--matrix", "0110;0011;0000;0000"});
  EXPECT_EQ(bad["orientable"], true);
  EXPECT_EQ(bad["symplectic"], false);
  EXPECT_EQ(bad["cohomologically_symplectic"], false);

  const auto zero = run_json({"check", "--matrix", "0000;0000;0000;0000"});
  EXPECT_EQ(zero["orientable"], true);
  EXPECT_EQ(zero["symplectic"], true);
  EXPECT_EQ(zero["kahler"], true);
  EXPECT_EQ(zero["pairing"], Json::parse("[[1,2],[3,4]]"));
}

TEST(Check, FixedKeySet) {
  const auto j = run_json({"check", "--matrix", "01;00"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "n", "orientable", "symplectic", "cohomologically_symplectic",
                                            "kahler", "flux_rank", "pairing"}));
}

TEST(Betti, Examples) {
  EXPECT_EQ(run_json({"betti", "--matrix", "00;00"})["betti"], Json::parse("[1,2,1]"));
  EXPECT_EQ(run_json({"betti", "--matrix", "01;00"})["betti"], Json::parse("[1,1,0]"));
  const auto j = run_json({"betti", "--basis", "--matrix", "0110;0000;0000;0000"});
  EXPECT_EQ(j["betti"], Json::parse("[1,2,2,2,1]"));
  EXPECT_EQ(j["poincare"], "1 + 2t + 2t^2 + 2t^3 + t^4");
  EXPECT_EQ(j["basis"]["2"], Json::parse("[[1,4],[2,3]]"));
}

TEST(Omega, Coefficients) {
  const auto j = run_json({"omega", "--matrix", "0110;0000;0000;0000"});
  EXPECT_EQ(j["omega"], Json::parse(R"({"c[1][4]": "1", "c[2][3]": "1"})"));
  EXPECT_EQ(j["invariant"], true);
  EXPECT_EQ(j["nondegenerate"], true);
}

TEST(Kahler, CaseTable) {
  const auto j = run_json({"kahler", "--matrix", "0110;0000;0000;0000"});
  EXPECT_EQ(j["coordinates"][0]["formula"], "z1 = u1 + sqrt(-1)*u4");
  EXPECT_EQ(j["coordinates"][1]["formula"], "z2 = u2 + sqrt(-1)*u3");
  EXPECT_EQ(j["generators"][0]["cases"], Json::parse(R"(["shift-by-1/2", "negation"])"));
}

TEST(Flux, Report) {
  const auto j = run_json({"flux", "--matrix", "0110;0000;0000;0000"});
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["zero_columns"], Json::parse("[1,4]"));
  EXPECT_EQ(j["generators"][0]["flux"], Json::parse(R"({"du4": "1"})"));
  EXPECT_EQ(j["up_to_scale"], true);
}

TEST(ExitCodes, NonSymplecticIsPreconditionFailure) {
  for (const char* cmd : {"omega", "kahler", "flux"}) {
    const auto r = run_cli({cmd, "--matrix", "0110;0011;0000;0000"});
    EXPECT_EQ(r.code, kPrecondition) << cmd;
    EXPECT_NE(r.err.find("no pairing of equal columns"), std::string::npos) << r.err;
  }
}

TEST(ExitCodes, ParseErrors) {
  EXPECT_EQ(run_cli({"check", "--matrix", "11;00"}).code, kParseError);
  EXPECT_EQ(run_cli({"check", "/nonexistent/file"}).code, kParseError);
  EXPECT_EQ(run_cli({"check"}).code, kParseError);
}

TEST(ExitCodes, LimitsArePreconditions) {
  EXPECT_EQ(run_cli({"census", "9"}).code, kPrecondition);
  EXPECT_EQ(run_cli({"verify", "7"}).code, kPrecondition);
}

TEST(Census, Report) {
  const auto j = run_json({"census", "4"});
  EXPECT_EQ(j["total"], 64);
  EXPECT_EQ(j["symplectic"], 6);
  EXPECT_TRUE(j["cohomologically_symplectic"].is_null());
  EXPECT_EQ(run_json({"census", "3"})["symplectic"], 0);
  const auto o = run_json({"census", "6", "--oracle", "--workers", "3"});
  EXPECT_EQ(o["cohomologically_symplectic"], o["symplectic"]);
  EXPECT_EQ(o["mismatches"], Json::array());
}

TEST(Verify, PassesThroughSix) {
  const auto r = run_cli({"verify", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(List, PrintsReparseableMatrices) {
  const auto r = run_cli({"list", "4", "--nonzero"});
  ASSERT_EQ(r.code, 0);
  std::vector<BottMatrix> parsed;
  std::istringstream in(r.out + "\n");
  std::string line, block;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (!block.empty()) parsed.push_back(parse_matrix_text(block).matrix);
      block.clear();
    } else {
      block += line + "\n";
    }
  }
  EXPECT_EQ(parsed, enumerate::list_symplectic(4, true));
}

TEST(Determinism, JsonIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "check", "--matrix", "0110;0000;0000;0000"},
        std::vector<std::string>{"--json", "betti", "--basis", "--matrix", "0110;0000;0000;0000"},
        std::vector<std::string>{"--json", "flux", "--matrix", "001100;001100;000000;000000;000000;000000"},
        std::vector<std::string>{"--json", "census", "6", "--oracle", "--workers", "4"}}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Text, AlignedKeys) {
  const auto r = run_cli({"check", "--matrix", "01;00"});
  EXPECT_NE(r.out.find("orientable                  false"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace bott::cli
