#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cforge/cochain.hpp"
#include "cforge/cohomology.hpp"
#include "cforge/deformation.hpp"
#include "cforge/diagram.hpp"

namespace cforge {

using Json = nlohmann::ordered_json;

/// A parsed workspace file (format 1). Cochain blocks stay as JSON until a
/// complex of the right nerve degree exists to read them against.
struct WorkspaceDocument {
  SkewDiagram diagram;
  bool skew = false;
  std::optional<AqftAxioms> axioms;
  int max_degree = 2;
  std::optional<std::size_t> cap_rows;
  std::optional<std::size_t> cap_cols;
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::map<std::string, Json> cochains;
};

/// Throws ParseError naming the JSON path (or line and column for syntax).
WorkspaceDocument parse_document(const std::string& text);
WorkspaceDocument load_document(const std::filesystem::path& file);
/// File contents as JSON with line/column syntax diagnostics.
Json load_json(const std::filesystem::path& file);

/// "p/q" strings (or integers) for real values, {"re", "im"} otherwise.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& path);

using AnyCochain = std::variant<BiCochain, TotalCochain>;

/// {"p", "q", "entries": [{"chain": [...]} or {"object": o}, "tensor": [...]]}.
/// Zero tensors are omitted. Tensors nest one array level per index, output
/// first; flat row-major arrays are accepted on input.
Json to_json(const Bicomplex& cx, const BiCochain& g);
/// {"n", "parts": [...]} with zero parts omitted.
Json to_json(const Bicomplex& cx, const TotalCochain& g);
BiCochain bicochain_from_json(const Bicomplex& cx, const Json& j, const std::string& path);
TotalCochain total_from_json(const Bicomplex& cx, const Json& j, const std::string& path);
/// Total when the object has "parts", bigraded otherwise.
AnyCochain cochain_from_json(const Bicomplex& cx, const Json& j, const std::string& path);

/// {"order": 1, "coeffs": [c]} where c is the degree-2 total cochain
/// multiplying t. A bare total cochain is accepted as well.
Json deformation_to_json(const Bicomplex& cx, const FirstOrderDeformation& d);
FirstOrderDeformation deformation_from_json(const Bicomplex& cx, const Json& j, const std::string& path);

Json to_json(const Report& r);
Json to_json(const Bicomplex& cx, const CohomologyReport& r);
Json to_json(const FirstOrderReport& r);

}  // namespace cforge
