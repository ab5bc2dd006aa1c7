#include <gtest/gtest.h>

#include "cforge/error.hpp"
#include "cforge/io.hpp"
#include "cforge/random.hpp"
#include "fixtures.hpp"

using namespace cforge;

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || a.has_star() != b.has_star()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return !a.has_star() || a.star_matrix() == b.star_matrix();
}

bool same_diagram(const AlgebraDiagram& a, const AlgebraDiagram& b) {
  if (a.cat.object_count() != b.cat.object_count() || a.cat.morphism_count() != b.cat.morphism_count()) return false;
  for (std::size_t o = 0; o < a.algebras.size(); ++o)
    if (!same_algebra(a.algebras[o], b.algebras[o])) return false;
  return a.maps == b.maps;
}

std::string message_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kOneObject = R"({"format": 1,
  "category": {"objects": ["pt"], "morphisms": [{"name": "id", "src": "pt", "tgt": "pt"}], "identities": ["id"]},
  "algebras": [{"dim": 1, "constants": [[0, 0, 0, "1"]]}]})";

}  // namespace

TEST(Documents, BundledFixturesMatchInCodeDiagrams) {
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("m2.json")).diagram.base, fixtures::m2()));
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("dual_numbers.json")).diagram.base, fixtures::dual_numbers()));
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("arrow_qq.json")).diagram.base, fixtures::arrow_qq()));
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("z2_m2_conjugation.json")).diagram.base,
                           fixtures::z2_m2_conjugation()));
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("z2_qq_swap.json")).diagram.base, fixtures::z2_qq_swap()));
  EXPECT_TRUE(same_diagram(load_document(fixtures::path("aqft_m2_pair.json")).diagram.base, fixtures::aqft_m2_pair()));
  auto proj = load_document(fixtures::path("z2_m2_projective.json"));
  EXPECT_TRUE(proj.skew);
  EXPECT_TRUE(same_diagram(proj.diagram.base, fixtures::z2_m2_projective().base));
  EXPECT_EQ(proj.diagram.u.size(), 1u);
}

TEST(Documents, NamesAndSettings) {
  auto doc = load_document(fixtures::path("aqft_m2_pair.json"));
  EXPECT_EQ(doc.object_names, (std::vector<std::string>{"O1", "O2", "O12", "D"}));
  EXPECT_EQ(doc.morphism_names[6], "c");
  ASSERT_TRUE(doc.axioms.has_value());
  EXPECT_EQ(doc.axioms->cauchy.size(), 1u);
  EXPECT_EQ(doc.max_degree, 1);
  auto arrow = load_document(fixtures::path("arrow_qq.json"));
  // identity maps may be omitted
  EXPECT_EQ(arrow.diagram.base.maps[0], Matrix::identity(1));
}

TEST(Documents, ErrorsNameTheirPath) {
  EXPECT_NE(message_of(R"({"category": {}})").find("$.format"), std::string::npos);
  EXPECT_NE(message_of(R"({"format": 2})").find("$.format"), std::string::npos);
  EXPECT_NE(message_of("{\"format\": 1,\n  \"category\": [").find("line 2"), std::string::npos);
  std::string text = kOneObject;
  auto with = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    t.replace(t.find(from), from.size(), to);
    return message_of(t);
  };
  EXPECT_EQ(message_of(text), "");
  EXPECT_NE(with("\"1\"]]", "\"1/0\"]]").find("$.algebras[0].constants[0][3]"), std::string::npos);
  EXPECT_NE(with("[0, 0, 0,", "[0, 0, 5,").find("out of range"), std::string::npos);
  EXPECT_NE(with("\"tgt\": \"pt\"", "\"tgt\": \"elsewhere\"").find("$.category.morphisms[0].tgt"),
            std::string::npos);
  EXPECT_NE(with("\"algebras\": [", "\"functor\": {\"g\": [[\"1\"]]}, \"algebras\": [").find("$.functor.g"),
            std::string::npos);
  EXPECT_NE(with("\"dim\": 1", "\"dim\": 0").find("$.algebras[0].dim"), std::string::npos);
  EXPECT_THROW(load_document("/no/such/file.json"), ParseError);
}

TEST(Scalars, JsonForms) {
  EXPECT_EQ(scalar_from_json(Json(5), "$"), Scalar(5));
  EXPECT_EQ(scalar_from_json(Json("-3/6"), "$"), Scalar(Rational(-1, 2)));
  EXPECT_EQ(scalar_from_json(Json::parse(R"({"re": "1", "im": "-2/3"})"), "$"),
            Scalar(Rational(1), Rational(-2, 3)));
  EXPECT_EQ(to_json(Scalar(Rational(7, 3))), Json("7/3"));
  Scalar z(Rational(1, 2), Rational(5));
  EXPECT_EQ(scalar_from_json(to_json(z), "$"), z);
  EXPECT_THROW(scalar_from_json(Json(1.5), "$"), ParseError);
  EXPECT_THROW(scalar_from_json(Json("x"), "$"), ParseError);
}

TEST(Cochains, RoundTripIsBitIdentical) {
  RandomOptions complex_entries;
  complex_entries.complex = true;
  for (const auto& [name, d] : fixtures::standard()) {
    Bicomplex cx(d, 3);
    Rng rng(60);
    for (int n = 0; n <= 3; ++n) {
      TotalCochain g = random_total(cx, n, rng, complex_entries);
      Json j = to_json(cx, g);
      TotalCochain back = total_from_json(cx, Json::parse(j.dump()), "$");
      EXPECT_EQ(back, g) << name;
      EXPECT_EQ(to_json(cx, back).dump(), j.dump());
      BiCochain b = random_bicochain(cx, n % 3, 1, rng);
      AnyCochain any = cochain_from_json(cx, to_json(cx, b), "$");
      ASSERT_TRUE(std::holds_alternative<BiCochain>(any));
      EXPECT_EQ(std::get<BiCochain>(any), b);
    }
  }
}

TEST(Cochains, NestedAndFlatTensors) {
  Bicomplex cx(fixtures::dual_numbers(), 2);
  Json nested = Json::parse(R"({"p": 0, "q": 2, "entries": [{"object": 0,
      "tensor": [[["0", "0"], ["0", "1"]], [["0", "0"], ["0", "0"]]]}]})");
  Json flat = Json::parse(R"({"p": 0, "q": 2, "entries": [{"object": 0,
      "tensor": ["0", "0", "0", "1", "0", "0", "0", "0"]}]})");
  BiCochain a = bicochain_from_json(cx, nested, "$");
  EXPECT_EQ(a, bicochain_from_json(cx, flat, "$"));
  EXPECT_EQ(a.values[0].at(3), Scalar(1));
  EXPECT_EQ(to_json(cx, a)["entries"][0]["tensor"], nested["entries"][0]["tensor"]);
}

TEST(Cochains, Errors) {
  Bicomplex cx(fixtures::arrow_qq(), 2);
  auto bad = [&](const char* text) { return bicochain_from_json(cx, Json::parse(text), "$"); };
  EXPECT_THROW(bad(R"({"p": 1, "q": 0, "entries": [{"chain": [2, 2], "tensor": ["1"]}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": 1, "q": 0, "entries": [{"chain": [7], "tensor": ["1"]}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": 1, "q": 0, "entries": [{"chain": [2], "tensor": ["1", "2"]}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": 1, "q": 0, "entries": [{"chain": [2], "tensor": ["1"]},
                                                   {"chain": [2], "tensor": ["1"]}]})"),
               ParseError);
  EXPECT_THROW(bad(R"({"p": 5, "q": 0, "entries": []})"), ParseError);
  EXPECT_THROW(total_from_json(cx, Json::parse(R"({"n": 1, "parts": [{"p": 0, "q": 0, "entries": []}]})"), "$"),
               ParseError);
}

TEST(Deformations, WrapperAndBareForms) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  auto inner = deformation_from_json(cx, load_json(fixtures::path("deformations/z2_m2_inner.json")), "$");
  EXPECT_TRUE(check_first_order(cx, inner).ok());
  EXPECT_FALSE(inner.mdot.is_zero());
  Json out = deformation_to_json(cx, inner);
  EXPECT_EQ(out["order"], 1);
  auto back = deformation_from_json(cx, out, "$");
  EXPECT_EQ(back.to_total(cx), inner.to_total(cx));
  auto bare = deformation_from_json(cx, out["coeffs"][0], "$");
  EXPECT_EQ(bare.to_total(cx), inner.to_total(cx));
  Json wrong = out;
  wrong["order"] = 2;
  EXPECT_THROW(deformation_from_json(cx, wrong, "$"), ParseError);
  wrong = out;
  wrong["coeffs"].push_back(out["coeffs"][0]);
  EXPECT_THROW(deformation_from_json(cx, wrong, "$"), ParseError);
  EXPECT_THROW(deformation_from_json(cx, Json::parse(R"({"n": 1, "parts": []})"), "$"), ParseError);
}

TEST(Reports, CohomologyJson) {
  Bicomplex cx(fixtures::m2(), 3);
  Json j = to_json(cx, cohomology_dims(cx, 2));
  ASSERT_EQ(j["degrees"].size(), 3u);
  EXPECT_EQ(j["degrees"][0]["dim_H"], 1);
  EXPECT_EQ(j["integrity"], true);
  Report r;
  r.add("functoriality", {1, 2}, {0}, "detail");
  Json rj = to_json(r);
  EXPECT_EQ(rj["ok"], false);
  EXPECT_EQ(rj["violations"][0]["chain"], Json::parse("[1, 2]"));
}
