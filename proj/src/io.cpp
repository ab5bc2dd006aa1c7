#include "cforge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cforge/error.hpp"

namespace cforge {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "required field is missing");
  return *it;
}

const Json* maybe(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const std::string& key) { return path + "." + key; }

// Resolves an integer index or a declared name.
int resolve(const Json& j, const std::vector<std::string>& names, std::size_t count, const std::string& path,
            const char* what) {
  long idx = -1;
  if (j.is_string()) {
    auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) fail(path, std::string("unknown ") + what + " \"" + j.get<std::string>() + "\"");
    idx = it - names.begin();
  } else {
    idx = as_int(j, path);
  }
  if (idx < 0 || static_cast<std::size_t>(idx) >= count)
    fail(path, std::string(what) + " index " + std::to_string(idx) + " out of range");
  return static_cast<int>(idx);
}

Vec vec_from_json(const Json& j, std::size_t n, const std::string& path) {
  as_array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i], at(path, i));
  return v;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  as_array(j, path);
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_from_json(j[r], cols, at(path, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

UnitalElement unital_from_json(const Json& j, std::size_t n, const std::string& path) {
  return {scalar_from_json(need(j, "scalar", path), dot(path, "scalar")),
          vec_from_json(need(j, "vector", path), n, dot(path, "vector"))};
}

std::vector<std::string> names_of(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(at(path, i), "expected a name");
    auto s = j[i].get<std::string>();
    if (!seen.insert(s).second) fail(at(path, i), "duplicate name \"" + s + "\"");
    out.push_back(std::move(s));
  }
  return out;
}

FiniteCategory category_from_json(const Json& j, WorkspaceDocument& doc, const std::string& path) {
  if (const Json* g = maybe(j, "group")) {
    as_array(*g, dot(path, "group"));
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < g->size(); ++r) {
      as_array((*g)[r], at(dot(path, "group"), r));
      std::vector<int> row;
      for (std::size_t c = 0; c < (*g)[r].size(); ++c)
        row.push_back(static_cast<int>(as_int((*g)[r][c], at(at(dot(path, "group"), r), c))));
      table.push_back(std::move(row));
    }
    try {
      return FiniteCategory::from_group(table);
    } catch (const Error& e) {
      fail(dot(path, "group"), e.what());
    }
  }
  if (const Json* n = maybe(j, "poset")) {
    long k = as_int(*n, dot(path, "poset"));
    if (k < 1) fail(dot(path, "poset"), "needs at least one object");
    return FiniteCategory::chain_poset(static_cast<int>(k));
  }
  const Json& objs = need(j, "objects", path);
  std::size_t object_count = 0;
  if (objs.is_array()) {
    doc.object_names = names_of(objs, dot(path, "objects"));
    object_count = objs.size();
  } else {
    long k = as_int(objs, dot(path, "objects"));
    if (k < 1) fail(dot(path, "objects"), "needs at least one object");
    object_count = static_cast<std::size_t>(k);
  }
  const Json& morphs = as_array(need(j, "morphisms", path), dot(path, "morphisms"));
  std::vector<FiniteCategory::Arrow> arrows;
  for (std::size_t i = 0; i < morphs.size(); ++i) {
    std::string p = at(dot(path, "morphisms"), i);
    if (const Json* nm = maybe(morphs[i], "name")) {
      if (!nm->is_string()) fail(dot(p, "name"), "expected a string");
      doc.morphism_names.push_back(nm->get<std::string>());
    } else {
      doc.morphism_names.push_back(std::to_string(i));
    }
    arrows.push_back({ObjectId{resolve(need(morphs[i], "src", p), doc.object_names, object_count, dot(p, "src"),
                                       "object")},
                      ObjectId{resolve(need(morphs[i], "tgt", p), doc.object_names, object_count, dot(p, "tgt"),
                                       "object")}});
  }
  if (std::set<std::string>(doc.morphism_names.begin(), doc.morphism_names.end()).size() !=
      doc.morphism_names.size())
    fail(dot(path, "morphisms"), "duplicate morphism names");
  const Json& ids = as_array(need(j, "identities", path), dot(path, "identities"));
  if (ids.size() != object_count) fail(dot(path, "identities"), "expected one identity per object");
  std::vector<MorphismId> identities;
  for (std::size_t i = 0; i < ids.size(); ++i)
    identities.push_back(
        MorphismId{resolve(ids[i], doc.morphism_names, arrows.size(), at(dot(path, "identities"), i), "morphism")});
  std::map<std::pair<int, int>, int> comp;
  if (const Json* c = maybe(j, "compose")) {
    as_array(*c, dot(path, "compose"));
    for (std::size_t i = 0; i < c->size(); ++i) {
      std::string p = at(dot(path, "compose"), i);
      if (!(*c)[i].is_array() || (*c)[i].size() != 3) fail(p, "expected [g, f, g∘f]");
      int g = resolve((*c)[i][0], doc.morphism_names, arrows.size(), at(p, 0), "morphism");
      int f = resolve((*c)[i][1], doc.morphism_names, arrows.size(), at(p, 1), "morphism");
      int gf = resolve((*c)[i][2], doc.morphism_names, arrows.size(), at(p, 2), "morphism");
      if (!comp.emplace(std::pair{g, f}, gf).second) fail(p, "composite listed twice");
    }
  }
  // Composites with identities may be left implicit.
  for (std::size_t o = 0; o < identities.size(); ++o) {
    int id = identities[o].index;
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      int fi = static_cast<int>(f);
      if (arrows[f].tgt.index == static_cast<int>(o)) comp.emplace(std::pair{id, fi}, fi);
      if (arrows[f].src.index == static_cast<int>(o)) comp.emplace(std::pair{fi, id}, fi);
    }
  }
  try {
    return FiniteCategory::create(static_cast<int>(object_count), std::move(arrows), std::move(identities), comp);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Algebra algebra_from_json(const Json& j, const std::string& path) {
  if (const Json* preset = maybe(j, "preset")) {
    if (!preset->is_string()) fail(dot(path, "preset"), "expected a string");
    auto name = preset->get<std::string>();
    auto size = [&] {
      long n = as_int(need(j, "n", path), dot(path, "n"));
      if (n < 1) fail(dot(path, "n"), "must be positive");
      return static_cast<int>(n);
    };
    if (name == "matrix") return Algebra::matrix_algebra(size());
    if (name == "diagonal") return Algebra::diagonal(size());
    if (name == "scalars") return Algebra::diagonal(1);
    if (name == "dual_numbers") return Algebra::dual_numbers();
    fail(dot(path, "preset"), "unknown preset \"" + name + "\"");
  }
  long dim = as_int(need(j, "dim", path), dot(path, "dim"));
  if (dim < 1) fail(dot(path, "dim"), "must be positive");
  auto n = static_cast<std::size_t>(dim);
  std::vector<StructureConstant> sc;
  if (const Json* c = maybe(j, "constants")) {
    as_array(*c, dot(path, "constants"));
    for (std::size_t i = 0; i < c->size(); ++i) {
      std::string p = at(dot(path, "constants"), i);
      const Json& e = (*c)[i];
      if (!e.is_array() || e.size() != 4) fail(p, "expected [i, j, k, c]");
      StructureConstant s{static_cast<int>(as_int(e[0], at(p, 0))), static_cast<int>(as_int(e[1], at(p, 1))),
                          static_cast<int>(as_int(e[2], at(p, 2))), scalar_from_json(e[3], at(p, 3))};
      for (int idx : {s.i, s.j, s.k})
        if (idx < 0 || idx >= dim) fail(p, "basis index out of range");
      sc.push_back(std::move(s));
    }
  }
  std::optional<Vec> unit;
  if (const Json* u = maybe(j, "unit")) unit = vec_from_json(*u, n, dot(path, "unit"));
  std::optional<Matrix> star;
  if (const Json* s = maybe(j, "star")) star = matrix_from_json(*s, n, n, dot(path, "star"));
  return Algebra(static_cast<int>(dim), sc, unit, star);
}

std::size_t tensor_size(std::size_t out, std::size_t in, int q) {
  std::size_t s = out;
  for (int k = 0; k < q; ++k) s *= in;
  return s;
}

// Nested row-major: outer index is the output coordinate, then one level per input.
Json nest(const Tensor& t, int level, std::size_t& k) {
  Json a = Json::array();
  std::size_t n = level == 0 ? t.out_dim() : t.in_dim();
  for (std::size_t i = 0; i < n; ++i)
    a.push_back(level == t.arity() ? to_json(t.at(k++)) : nest(t, level + 1, k));
  return a;
}

Json tensor_to_json(const Tensor& t) {
  std::size_t k = 0;
  return nest(t, 0, k);
}

// Accepts the nested form or a flat array of the right length.
void unnest(const Json& j, int level, int arity, std::size_t out, std::size_t in, const std::string& path,
            std::vector<std::pair<Json, std::string>>& leaves) {
  const Json& a = as_array(j, path);
  std::size_t n = level == 0 ? out : in;
  if (a.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(a.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (level == arity) leaves.emplace_back(a[i], at(path, i));
    else unnest(a[i], level + 1, arity, out, in, at(path, i), leaves);
  }
}

Json violation_to_json(const Violation& v) {
  Json j;
  j["check"] = v.check;
  j["chain"] = v.chain;
  j["basis"] = v.basis;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.is_real()) return format_rational(s.re());
  Json j;
  j["re"] = format_rational(s.re());
  j["im"] = format_rational(s.im());
  return j;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
      try {
        return Scalar(parse_rational(j.get<std::string>()));
      } catch (const std::exception& e) {
        fail(path, e.what());
      }
    }
    if (j.is_object()) {
      Rational re = 0, im = 0;
      if (const Json* r = maybe(j, "re")) re = scalar_from_json(*r, dot(path, "re")).re();
      if (const Json* i = maybe(j, "im")) im = scalar_from_json(*i, dot(path, "im")).re();
      return Scalar(re, im);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path, "expected an exact scalar (\"p/q\", integer or {\"re\", \"im\"})");
}

WorkspaceDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  const std::string root = "$";
  if (!j.is_object()) fail(root, "expected an object");
  if (as_int(need(j, "format", root), "$.format") != 1) fail("$.format", "only format 1 is supported");

  WorkspaceDocument doc;
  AlgebraDiagram& d = doc.diagram.base;
  d.cat = category_from_json(need(j, "category", root), doc, "$.category");
  if (doc.morphism_names.empty())
    for (int f = 0; f < d.cat.morphism_count(); ++f) doc.morphism_names.push_back(std::to_string(f));

  const Json& algs = as_array(need(j, "algebras", root), "$.algebras");
  if (static_cast<int>(algs.size()) != d.cat.object_count())
    fail("$.algebras", "expected one algebra per object (" + std::to_string(d.cat.object_count()) + ")");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    try {
      d.algebras.push_back(algebra_from_json(algs[i], at("$.algebras", i)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at("$.algebras", i), e.what());
    }
  }

  const auto m = static_cast<std::size_t>(d.cat.morphism_count());
  std::vector<std::optional<Matrix>> maps(m);
  const Json* fun = maybe(j, "functor");
  auto read_map = [&](std::size_t f, const Json& mj, const std::string& p) {
    if (mj.is_null()) return;
    MorphismId mor{static_cast<int>(f)};
    if (maps[f]) fail(p, "map given twice");
    maps[f] = matrix_from_json(mj, d.dim(d.cat.tgt(mor)), d.dim(d.cat.src(mor)), p);
  };
  if (fun && fun->is_array()) {
    if (fun->size() != m) fail("$.functor", "expected one entry per morphism (" + std::to_string(m) + ")");
    for (std::size_t f = 0; f < m; ++f) read_map(f, (*fun)[f], at("$.functor", f));
  } else if (fun && fun->is_object()) {
    for (const auto& [key, val] : fun->items()) {
      std::string p = "$.functor." + key;
      int f = -1;
      auto it = std::find(doc.morphism_names.begin(), doc.morphism_names.end(), key);
      if (it == doc.morphism_names.end()) fail(p, "unknown morphism \"" + key + "\"");
      f = static_cast<int>(it - doc.morphism_names.begin());
      read_map(static_cast<std::size_t>(f), val, p);
    }
  } else if (fun) {
    fail("$.functor", "expected an array or an object");
  }
  for (std::size_t f = 0; f < m; ++f) {
    MorphismId mor{static_cast<int>(f)};
    if (maps[f]) {
      d.maps.push_back(std::move(*maps[f]));
    } else if (d.cat.is_identity(mor)) {
      d.maps.push_back(Matrix::identity(d.dim(d.cat.src(mor))));
    } else {
      fail("$.functor", "missing map for morphism \"" + doc.morphism_names[f] + "\"");
    }
  }

  if (const Json* sk = maybe(j, "skew")) {
    doc.skew = true;
    as_array(*sk, "$.skew");
    for (std::size_t i = 0; i < sk->size(); ++i) {
      std::string p = at("$.skew", i);
      const Json& pair = need((*sk)[i], "pair", p);
      if (!pair.is_array() || pair.size() != 2) fail(dot(p, "pair"), "expected [psi, phi]");
      int psi = resolve(pair[0], doc.morphism_names, m, dot(p, "pair[0]"), "morphism");
      int phi = resolve(pair[1], doc.morphism_names, m, dot(p, "pair[1]"), "morphism");
      if (!d.cat.composable(MorphismId{psi}, MorphismId{phi})) fail(dot(p, "pair"), "morphisms are not composable");
      auto u = unital_from_json(need((*sk)[i], "u", p), d.dim(d.cat.tgt(MorphismId{psi})), dot(p, "u"));
      if (!doc.diagram.u.emplace(std::pair{psi, phi}, std::move(u)).second) fail(p, "u given twice");
    }
  }

  if (const Json* ax = maybe(j, "axioms")) {
    AqftAxioms a;
    if (const Json* sl = maybe(*ax, "spacelike")) {
      as_array(*sl, "$.axioms.spacelike");
      for (std::size_t i = 0; i < sl->size(); ++i) {
        std::string p = at("$.axioms.spacelike", i);
        if (!(*sl)[i].is_array() || (*sl)[i].size() != 2) fail(p, "expected [f, g]");
        a.spacelike.emplace_back(MorphismId{resolve((*sl)[i][0], doc.morphism_names, m, at(p, 0), "morphism")},
                                 MorphismId{resolve((*sl)[i][1], doc.morphism_names, m, at(p, 1), "morphism")});
      }
    }
    if (const Json* ca = maybe(*ax, "cauchy")) {
      as_array(*ca, "$.axioms.cauchy");
      for (std::size_t i = 0; i < ca->size(); ++i)
        a.cauchy.push_back(MorphismId{resolve((*ca)[i], doc.morphism_names, m, at("$.axioms.cauchy", i), "morphism")});
    }
    doc.axioms = std::move(a);
  }

  if (const Json* st = maybe(j, "settings")) {
    if (const Json* md = maybe(*st, "max_degree")) {
      long v = as_int(*md, "$.settings.max_degree");
      if (v < 0) fail("$.settings.max_degree", "must be non-negative");
      doc.max_degree = static_cast<int>(v);
    }
    if (const Json* r = maybe(*st, "cap_rows")) doc.cap_rows = static_cast<std::size_t>(as_int(*r, "$.settings.cap_rows"));
    if (const Json* c = maybe(*st, "cap_cols")) doc.cap_cols = static_cast<std::size_t>(as_int(*c, "$.settings.cap_cols"));
  }

  if (const Json* cs = maybe(j, "cochains")) {
    if (!cs->is_object()) fail("$.cochains", "expected an object of named cochains");
    for (const auto& [name, val] : cs->items()) doc.cochains.emplace(name, val);
  }
  return doc;
}

Json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(e.byte, text.size())), '\n'));
    throw ParseError(file.string() + ": line " + std::to_string(line) + ": " + e.what());
  }
}

WorkspaceDocument load_document(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

Json to_json(const Bicomplex& cx, const BiCochain& g) {
  Json j;
  j["p"] = g.p;
  j["q"] = g.q;
  Json entries = Json::array();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (g.values[i].is_zero()) continue;
    const Chain& c = cx.chain(g.p, i);
    Json e;
    if (g.p == 0) {
      e["object"] = c.object.index;
    } else {
      Json ids = Json::array();
      for (auto f : c.arrows) ids.push_back(f.index);
      e["chain"] = std::move(ids);
    }
    e["tensor"] = tensor_to_json(g.values[i]);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const Bicomplex& cx, const TotalCochain& g) {
  Json j;
  j["n"] = g.n;
  Json parts = Json::array();
  for (const auto& part : g.parts)
    if (!part.is_zero()) parts.push_back(to_json(cx, part));
  j["parts"] = std::move(parts);
  return j;
}

BiCochain bicochain_from_json(const Bicomplex& cx, const Json& j, const std::string& path) {
  long p = as_int(need(j, "p", path), dot(path, "p"));
  long q = as_int(need(j, "q", path), dot(path, "q"));
  if (p < 0 || q < 0) fail(path, "bidegree must be non-negative");
  if (p > cx.max_degree())
    fail(dot(path, "p"), "simplicial degree " + std::to_string(p) + " exceeds the nerve degree " +
                             std::to_string(cx.max_degree()));
  BiCochain g = BiCochain::zero(cx, static_cast<int>(p), static_cast<int>(q));
  const Json& entries = as_array(need(j, "entries", path), dot(path, "entries"));
  std::vector<bool> seen(g.values.size());
  const FiniteCategory& cat = cx.cat();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    std::string ep = at(dot(path, "entries"), e);
    Chain c;
    if (p == 0) {
      long o = as_int(need(entries[e], "object", ep), dot(ep, "object"));
      if (o < 0 || o >= cat.object_count()) fail(dot(ep, "object"), "object index out of range");
      c.object = ObjectId{static_cast<int>(o)};
    } else {
      const Json& arr = as_array(need(entries[e], "chain", ep), dot(ep, "chain"));
      if (static_cast<long>(arr.size()) != p) fail(dot(ep, "chain"), "chain length must equal p");
      for (std::size_t k = 0; k < arr.size(); ++k) {
        long f = as_int(arr[k], at(dot(ep, "chain"), k));
        if (f < 0 || f >= cat.morphism_count()) fail(at(dot(ep, "chain"), k), "morphism index out of range");
        c.arrows.push_back(MorphismId{static_cast<int>(f)});
      }
      if (!cat.is_valid_chain(c)) fail(dot(ep, "chain"), "morphisms are not composable");
    }
    std::size_t idx = cx.nerve().index_of(c);
    if (seen[idx]) fail(ep, "chain listed twice");
    seen[idx] = true;
    std::size_t size = tensor_size(cx.end_dim(c), cx.begin_dim(c), static_cast<int>(q));
    const Json& tj = as_array(need(entries[e], "tensor", ep), dot(ep, "tensor"));
    std::vector<std::pair<Json, std::string>> leaves;
    if (q > 0 && tj.size() == size && !tj.empty() && !tj[0].is_array()) {
      for (std::size_t k = 0; k < size; ++k) leaves.emplace_back(tj[k], at(dot(ep, "tensor"), k));
    } else {
      unnest(tj, 0, static_cast<int>(q), cx.end_dim(c), cx.begin_dim(c), dot(ep, "tensor"), leaves);
    }
    Tensor& t = g.values[idx];
    for (std::size_t k = 0; k < size; ++k) {
      Scalar x = scalar_from_json(leaves[k].first, leaves[k].second);
      if (!x.is_zero()) t.ref(k) = x;
    }
  }
  return g;
}

TotalCochain total_from_json(const Bicomplex& cx, const Json& j, const std::string& path) {
  long n = as_int(need(j, "n", path), dot(path, "n"));
  if (n < 0) fail(dot(path, "n"), "must be non-negative");
  TotalCochain t = TotalCochain::zero(cx, static_cast<int>(n));
  const Json& parts = as_array(need(j, "parts", path), dot(path, "parts"));
  std::set<int> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BiCochain g = bicochain_from_json(cx, parts[i], at(dot(path, "parts"), i));
    if (g.p + g.q != n) fail(at(dot(path, "parts"), i), "bidegree does not add up to n");
    if (!seen.insert(g.p).second) fail(at(dot(path, "parts"), i), "part listed twice");
    t.add(g);
  }
  return t;
}

AnyCochain cochain_from_json(const Bicomplex& cx, const Json& j, const std::string& path) {
  if (maybe(j, "parts")) return total_from_json(cx, j, path);
  return bicochain_from_json(cx, j, path);
}

Json deformation_to_json(const Bicomplex& cx, const FirstOrderDeformation& d) {
  Json j;
  j["order"] = 1;
  j["skew"] = d.udot.has_value();
  j["coeffs"] = Json::array({to_json(cx, d.to_total(cx))});
  return j;
}

FirstOrderDeformation deformation_from_json(const Bicomplex& cx, const Json& j, const std::string& path) {
  bool skew = false;
  TotalCochain t;
  if (const Json* order = maybe(j, "order")) {
    if (as_int(*order, dot(path, "order")) != 1) fail(dot(path, "order"), "only first order is supported");
    if (const Json* s = maybe(j, "skew")) {
      if (!s->is_boolean()) fail(dot(path, "skew"), "expected a boolean");
      skew = s->get<bool>();
    }
    const Json& coeffs = as_array(need(j, "coeffs", path), dot(path, "coeffs"));
    if (coeffs.size() != 1) fail(dot(path, "coeffs"), "expected exactly one coefficient");
    auto c = cochain_from_json(cx, coeffs[0], dot(path, "coeffs[0]"));
    if (auto* b = std::get_if<BiCochain>(&c))
      t = TotalCochain::from(cx, *b);
    else
      t = std::get<TotalCochain>(c);
  } else {
    t = total_from_json(cx, j, path);
  }
  if (t.n != 2) fail(path, "a first-order deformation has total degree 2");
  if (t.parts.size() < 3) fail(path, "the complex must reach nerve degree 2");
  return FirstOrderDeformation::from_total(t, skew);
}

Json to_json(const Report& r) {
  Json j;
  j["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(violation_to_json(x));
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const Bicomplex& cx, const CohomologyReport& r) {
  Json j;
  j["variant"] = std::string(to_string(r.variant));
  j["max_degree"] = r.max_degree;
  j["integrity"] = r.integrity;
  Json degs = Json::array();
  for (const auto& d : r.degrees) {
    Json e;
    e["n"] = d.n;
    e["dim_C"] = d.dim_c;
    e["dim_Z"] = d.dim_z;
    e["dim_B"] = d.dim_b;
    e["dim_H"] = d.dim_h;
    if (!d.representatives.empty()) {
      Json reps = Json::array();
      for (const auto& rep : d.representatives) reps.push_back(to_json(cx, rep));
      e["representatives"] = std::move(reps);
    }
    degs.push_back(std::move(e));
  }
  j["degrees"] = std::move(degs);
  return j;
}

Json to_json(const FirstOrderReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json e;
    e["bidegree"] = {c.p, c.q};
    e["structure"] = c.structure;
    e["ok"] = c.ok();
    e["nonzero"] = c.nonzero;
    Json w = Json::array();
    for (const auto& v : c.witnesses) w.push_back(violation_to_json(v));
    e["witnesses"] = std::move(w);
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace cforge
