#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "fixtures.hpp"

using namespace cforge;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cochain-forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixtures::path(name).string(); }

// Absolute fixture paths differ between checkouts.
std::string normalise(std::string s) {
  const std::string dir = fixtures::path("").string();
  for (auto pos = s.find(dir); pos != std::string::npos; pos = s.find(dir, pos)) s.replace(pos, dir.size(), "fixtures/");
  return s;
}

Json json_of(const Outcome& o) { return Json::parse(o.out); }

struct SnapshotCase {
  std::string name;
  std::vector<std::string> args;
  int code;
};

std::vector<SnapshotCase> snapshot_cases() {
  return {
      {"validate_z2_m2_conjugation", {"validate", fx("z2_m2_conjugation.json")}, 0},
      {"validate_broken_composition", {"validate", fx("broken_composition.json")}, 2},
      {"validate_z2_m2_nonunitary", {"validate", fx("z2_m2_nonunitary.json")}, 2},
      {"validate_aqft_m2_pair", {"validate", fx("aqft_m2_pair.json")}, 0},
      {"validate_malformed", {"validate", fx("malformed.json")}, 3},
      {"cohomology_m2", {"cohomology", fx("m2.json"), "--max-degree", "2"}, 0},
      {"cohomology_dual_numbers", {"cohomology", fx("dual_numbers.json"), "--max-degree", "2"}, 0},
      {"cohomology_z2_m2_conjugation", {"cohomology", fx("z2_m2_conjugation.json"), "--max-degree", "0"}, 0},
      {"cohomology_arrow_qq", {"cohomology", fx("arrow_qq.json"), "--max-degree", "0"}, 0},
      {"cohomology_z2_m2_asimplicial",
       {"cohomology", fx("z2_m2_conjugation.json"), "--max-degree", "1", "--variant", "asimplicial"},
       0},
      {"cohomology_capped", {"cohomology", fx("z2_m2_conjugation.json"), "--cap-rows", "5"}, 4},
      {"cohomology_skew", {"cohomology", fx("z2_m2_projective.json")}, 2},
      {"eval_bracket_m_m", {"eval", fx("m2.json"), "bracket(m, m)"}, 0},
      {"eval_star_m", {"eval", fx("m2.json"), "sub(star(m), m)"}, 0},
      {"eval_is_cocycle", {"eval", fx("z2_qq_swap.json"), "is_cocycle(delta(random(1)))", "--seed", "7"}, 0},
      {"deform_z2_m2_inner",
       {"deform", fx("z2_m2_conjugation.json"), "--first-order", fx("deformations/z2_m2_inner.json"), "--mc"},
       0},
      {"deform_m2_nonassociative",
       {"deform", fx("m2.json"), "--first-order", fx("deformations/m2_nonassociative.json")},
       2},
      {"deform_zero", {"deform", fx("m2.json"), "--first-order", fx("deformations/zero.json"), "--mc"}, 0},
      {"deform_dual_square_to_one",
       {"deform", fx("dual_numbers.json"), "--first-order", fx("deformations/dual_square_to_one.json"), "--mc"},
       0},
  };
}

}  // namespace

TEST(Cli, SnapshotsMatch) {
  const bool update = std::getenv("CFORGE_UPDATE_SNAPSHOTS") != nullptr;
  for (const auto& c : snapshot_cases()) {
    auto args = c.args;
    args.insert(args.end(), {"--output", "text", "--no-timing"});
    Outcome o = invoke(args);
    EXPECT_EQ(o.code, c.code) << c.name << "\n" << o.err;
    std::string got = normalise(o.out);
    auto file = fixtures::path("snapshots/" + c.name + ".txt");
    if (update) {
      std::ofstream(file) << got;
      continue;
    }
    std::ifstream in(file);
    ASSERT_TRUE(in) << "missing snapshot " << file << "; regenerate with CFORGE_UPDATE_SNAPSHOTS=1";
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(got, want.str()) << c.name;
  }
}

TEST(Cli, TextRenderingMatchesJson) {
  for (const auto& c : snapshot_cases()) {
    auto args = c.args;
    args.push_back("--no-timing");
    Outcome json = invoke(args);
    args.insert(args.end(), {"--output", "text"});
    Outcome text = invoke(args);
    EXPECT_EQ(cli::render_text(json_of(json)), text.out) << c.name;
  }
}

TEST(Cli, ValidateVerdicts) {
  Json ok = json_of(invoke({"validate", fx("z2_m2_conjugation.json")}));
  EXPECT_EQ(ok["ok"], true);
  EXPECT_TRUE(ok.contains("timing_ms"));
  Json broken = json_of(invoke({"validate", fx("broken_composition.json")}));
  EXPECT_EQ(broken["checks"]["diagram"]["violations"][0]["check"], "category associativity");
  Json nonunitary = json_of(invoke({"validate", fx("z2_m2_nonunitary.json")}));
  bool star_failure = false;
  for (const auto& v : nonunitary["checks"]["diagram"]["violations"])
    star_failure |= v["check"] == "u unitary";
  EXPECT_TRUE(star_failure);
  Outcome parse = invoke({"validate", fx("malformed.json")});
  EXPECT_EQ(parse.code, 3);
  EXPECT_NE(parse.err.find("$.algebras[0].constants[1][3]"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "/no/such/file.json"}).code, 3);
}

TEST(Cli, CohomologyTables) {
  auto dims = [](const Json& j) {
    std::vector<int> out;
    for (const auto& d : j["cohomology"]["degrees"]) out.push_back(d["dim_H"].get<int>());
    return out;
  };
  EXPECT_EQ(dims(json_of(invoke({"cohomology", fx("m2.json"), "--max-degree", "2"}))), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(dims(json_of(invoke({"cohomology", fx("z2_m2_conjugation.json"), "--max-degree", "0"}))),
            (std::vector<int>{1}));
  EXPECT_EQ(dims(json_of(invoke({"cohomology", fx("arrow_qq.json"), "--max-degree", "0"}))), (std::vector<int>{1}));
  // the document's max_degree applies without the flag
  EXPECT_EQ(json_of(invoke({"cohomology", fx("arrow_qq.json")}))["cohomology"]["degrees"].size(), 2u);
  Json reps = json_of(invoke({"cohomology", fx("dual_numbers.json"), "--max-degree", "1", "--representatives"}));
  EXPECT_EQ(reps["cohomology"]["degrees"][1]["representatives"].size(), 1u);
  Json capped = json_of(invoke({"cohomology", fx("z2_m2_conjugation.json"), "--cap-rows", "5"}));
  EXPECT_EQ(capped["error"]["degree"], 0);
  EXPECT_EQ(capped["exit_code"], 4);
}

TEST(Cli, CapFromEnvironmentOverridesFlags) {
  setenv("COCHAIN_FORGE_CAP", "3", 1);
  Outcome o = invoke({"cohomology", fx("m2.json"), "--cap-rows", "100000", "--cap-cols", "100000"});
  unsetenv("COCHAIN_FORGE_CAP");
  EXPECT_EQ(o.code, 4);
}

TEST(Cli, EvalWritesCochains) {
  auto out = std::filesystem::temp_directory_path() / "cforge_eval_out.json";
  Outcome o = invoke({"eval", fx("z2_m2_conjugation.json"), "delta(random(0, 1))", "--seed", "3", "--out", out.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  Outcome check = invoke({"eval", fx("z2_m2_conjugation.json"), "is_cocycle(g)", "--cochain", "g=" + out.string()});
  EXPECT_EQ(json_of(check)["result"], true);
  Outcome again = invoke({"eval", fx("z2_m2_conjugation.json"), "delta(random(0, 1))", "--seed", "3"});
  Outcome reread = invoke({"eval", fx("z2_m2_conjugation.json"), "add(g, g)", "--cochain", "g=" + out.string()});
  EXPECT_EQ(json_of(again)["result"]["n"], 2);
  EXPECT_EQ(json_of(reread)["kind"], "total");
  std::filesystem::remove(out);
}

TEST(Cli, EvalErrors) {
  Outcome unknown = invoke({"eval", fx("m2.json"), "cup(m, nope)"});
  EXPECT_EQ(unknown.code, 3);
  Outcome shape = invoke({"eval", fx("m2.json"), "circ_j(m, mu, 7)"});
  EXPECT_NE(shape.code, 0);
  EXPECT_NE(shape.err.find("circ_j"), std::string::npos);
  EXPECT_EQ(invoke({"eval", fx("m2.json"), "cup(m"}).code, 3);
}

TEST(Cli, DeformVerdicts) {
  Json inner = json_of(invoke({"deform", fx("z2_m2_conjugation.json"), "--first-order",
                               fx("deformations/z2_m2_inner.json"), "--mc"}));
  EXPECT_EQ(inner["ok"], true);
  EXPECT_EQ(inner["mc"]["witness_found"], true);
  Json bad = json_of(invoke({"deform", fx("m2.json"), "--first-order", fx("deformations/m2_nonassociative.json")}));
  EXPECT_EQ(bad["ok"], false);
  const Json& assoc = bad["check_first_order"]["components"][0];
  EXPECT_EQ(assoc["bidegree"], Json::parse("[0, 3]"));
  EXPECT_EQ(assoc["witnesses"][0]["basis"].size(), 3u);
  Json zero = json_of(invoke({"deform", fx("m2.json"), "--first-order", fx("deformations/zero.json"), "--mc"}));
  EXPECT_EQ(zero["ok"], true);
  EXPECT_EQ(zero["mc"]["bracket_zero"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"cohomology", fx("m2.json"), "--variant", "partial"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
