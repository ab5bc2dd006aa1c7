#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cforge/error.hpp"
#include "cforge/random.hpp"

namespace cforge::cli {

namespace {

using Clock = std::chrono::steady_clock;

Caps resolve_caps(const Options& o, const WorkspaceDocument& doc) {
  Caps caps;
  if (doc.cap_rows) caps.rows = *doc.cap_rows;
  if (doc.cap_cols) caps.cols = *doc.cap_cols;
  if (o.cap_rows) caps.rows = *o.cap_rows;
  if (o.cap_cols) caps.cols = *o.cap_cols;
  return Caps::from_env(caps);
}

Json header(const char* command, const Options& o) {
  Json j;
  j["command"] = command;
  j["input"] = o.input;
  return j;
}

Report validate_document(const WorkspaceDocument& doc, Json& report) {
  Report diag = doc.skew ? validate_skew(doc.diagram) : validate_diagram(doc.diagram.base);
  report["checks"]["diagram"] = to_json(diag);
  report["checks"]["diagram"]["kind"] = doc.skew ? "skew" : "strict";
  Report all = diag;
  if (doc.axioms) {
    Report ax = check_aqft_axioms(doc.diagram.base, *doc.axioms);
    report["checks"]["axioms"] = to_json(ax);
    all.merge(ax);
  }
  return all;
}

void require_strict(const WorkspaceDocument& doc) {
  if (!doc.diagram.u.empty())
    throw Error("the bicomplex is built from a strict diagram; this document carries nontrivial u entries");
}

// ---- expression evaluation -------------------------------------------------

using Value = std::variant<BiCochain, TotalCochain, bool>;

struct Named {
  std::string label;
  Value value;
};

class Evaluator {
 public:
  Evaluator(const Bicomplex& cx, std::map<std::string, Value> env, std::uint64_t seed)
      : cx_(cx), env_(std::move(env)), rng_(seed) {}

  Named evaluate(const std::string& text) {
    text_ = text;
    pos_ = 0;
    Named v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + text_.substr(pos_) + "' in expression");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError("expected a name or number at offset " + std::to_string(pos_));
    return text_.substr(start, pos_ - start);
  }

  Named expr() {
    std::string name = ident();
    if (!accept('(')) {
      if (std::isdigit(static_cast<unsigned char>(name[0]))) throw ParseError("bare number '" + name + "'");
      auto it = env_.find(name);
      if (it == env_.end()) throw ParseError("unknown cochain '" + name + "'");
      return {name, it->second};
    }
    std::vector<Named> args;
    std::vector<long> ints;
    if (!accept(')')) {
      do {
        skip();
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
          std::size_t start = pos_++;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          ints.push_back(std::stol(text_.substr(start, pos_ - start)));
        } else {
          args.push_back(expr());
        }
      } while (accept(','));
      expect(')');
    }
    std::string label = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) label += (i ? ", " : "") + args[i].label;
    for (std::size_t i = 0; i < ints.size(); ++i) label += (i || !args.empty() ? ", " : "") + std::to_string(ints[i]);
    label += ")";
    try {
      return {label, apply(name, args, ints)};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ShapeError("in " + label + ": " + e.what());
    }
  }

  static void arity(const std::string& name, const std::vector<Named>& args, std::size_t n,
                    const std::vector<long>& ints, std::size_t k) {
    if (args.size() != n || ints.size() != k)
      throw ParseError(name + " takes " + std::to_string(n) + " cochain and " + std::to_string(k) +
                       " integer arguments");
  }

  const BiCochain& bi(const Named& v, const std::string& op) {
    if (auto* b = std::get_if<BiCochain>(&v.value)) return *b;
    throw ShapeError(op + " needs a bigraded cochain, but '" + v.label + "' is not one");
  }
  TotalCochain total(const Named& v, const std::string& op) {
    if (auto* b = std::get_if<BiCochain>(&v.value)) return TotalCochain::from(cx_, *b);
    if (auto* t = std::get_if<TotalCochain>(&v.value)) return *t;
    throw ShapeError(op + " needs a cochain, but '" + v.label + "' is a truth value");
  }
  bool both_bi(const std::vector<Named>& a) {
    return std::all_of(a.begin(), a.end(), [](const Named& v) { return std::holds_alternative<BiCochain>(v.value); });
  }

  Value apply(const std::string& name, const std::vector<Named>& a, const std::vector<long>& k) {
    if (name == "random") {
      if (!a.empty() || k.empty() || k.size() > 2) throw ParseError("random takes (p, q) or (n)");
      for (long x : k)
        if (x < 0) throw ParseError("random needs non-negative degrees");
      if (k.size() == 2) return random_bicochain(cx_, static_cast<int>(k[0]), static_cast<int>(k[1]), rng_);
      return random_total(cx_, static_cast<int>(k[0]), rng_);
    }
    if (name == "delta" || name == "star" || name == "is_cocycle" || name == "delta_h" || name == "delta_s") {
      arity(name, a, 1, k, 0);
      if (name == "delta_h") return delta_h(cx_, bi(a[0], name));
      if (name == "delta_s") return delta_s(cx_, bi(a[0], name));
      if (name == "is_cocycle") return is_cocycle(cx_, total(a[0], name));
      if (name == "star") {
        if (both_bi(a)) return star(cx_, bi(a[0], name));
        return star(cx_, total(a[0], name));
      }
      if (both_bi(a)) return delta(cx_, bi(a[0], name));
      return delta(cx_, total(a[0], name));
    }
    if (name == "circ_j" || name == "bullet_i") {
      arity(name, a, 2, k, 1);
      int idx = static_cast<int>(k[0]);
      if (name == "circ_j") return circ_j(cx_, bi(a[0], name), bi(a[1], name), idx);
      return bullet_i(cx_, bi(a[0], name), bi(a[1], name), idx);
    }
    if (name == "add" || name == "sub") {
      arity(name, a, 2, k, 0);
      if (both_bi(a)) {
        if (name == "add") return bi(a[0], name) + bi(a[1], name);
        return bi(a[0], name) - bi(a[1], name);
      }
      if (name == "add") return total(a[0], name) + total(a[1], name);
      return total(a[0], name) - total(a[1], name);
    }
    if (name == "cup" || name == "circ" || name == "bullet" || name == "bar_circ" || name == "bracket") {
      arity(name, a, 2, k, 0);
      bool bigraded = both_bi(a);
      if (name == "bar_circ") {
        if (bigraded) return bar_circ(cx_, bi(a[0], name), bi(a[1], name));
        return bar_circ(cx_, total(a[0], name), total(a[1], name));
      }
      if (name == "bracket") {
        if (bigraded) return bracket(cx_, bi(a[0], name), bi(a[1], name));
        return bracket(cx_, total(a[0], name), total(a[1], name));
      }
      if (bigraded) {
        if (name == "cup") return cup(cx_, bi(a[0], name), bi(a[1], name));
        if (name == "circ") return circ(cx_, bi(a[0], name), bi(a[1], name));
        return bullet(cx_, bi(a[0], name), bi(a[1], name));
      }
      if (name == "cup") return cup(cx_, total(a[0], name), total(a[1], name));
      if (name == "circ") return circ(cx_, total(a[0], name), total(a[1], name));
      return bullet(cx_, total(a[0], name), total(a[1], name));
    }
    throw ParseError("unknown operation '" + name + "'");
  }

  const Bicomplex& cx_;
  std::map<std::string, Value> env_;
  Rng rng_;
  std::string text_;
  std::size_t pos_ = 0;
};

Json value_to_json(const Bicomplex& cx, const Value& v) {
  if (auto* b = std::get_if<BiCochain>(&v)) return to_json(cx, *b);
  if (auto* t = std::get_if<TotalCochain>(&v)) return to_json(cx, *t);
  return std::get<bool>(v);
}

Value value_from_json(const Bicomplex& cx, const Json& j, const std::string& path) {
  auto c = cochain_from_json(cx, j, path);
  if (auto* b = std::get_if<BiCochain>(&c)) return *b;
  return std::get<TotalCochain>(c);
}

void render(const Json& j, int indent, std::ostringstream& os) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto inline_ok = [](const Json& x) {
    if (!x.is_array()) return !x.is_object();
    return std::all_of(x.begin(), x.end(), [](const Json& y) { return !y.is_object() && !y.is_array(); });
  };
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [&](const Json& x) {
    if (!x.is_array()) return scalar(x);
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + scalar(x[i]);
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (inline_ok(v)) {
        os << pad << k << ": " << flat(v) << '\n';
      } else {
        os << pad << k << ":\n";
        render(v, indent + 1, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (inline_ok(v)) {
        os << pad << "- " << flat(v) << '\n';
      } else {
        os << pad << "-\n";
        render(v, indent + 1, os);
      }
    }
  } else {
    os << pad << flat(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

int cmd_validate(const Options& o, Json& report) {
  report = header("validate", o);
  WorkspaceDocument doc = load_document(o.input);
  Report all = validate_document(doc, report);
  report["ok"] = all.ok();
  return all.ok() ? ExitCode::ok : ExitCode::failed;
}

int cmd_cohomology(const Options& o, Json& report) {
  report = header("cohomology", o);
  WorkspaceDocument doc = load_document(o.input);
  if (!validate_document(doc, report).ok()) {
    report["ok"] = false;
    return ExitCode::failed;
  }
  require_strict(doc);
  int n = o.max_degree.value_or(doc.max_degree);
  CohomologyOptions opts;
  opts.variant = parse_variant(o.variant);
  opts.representatives = o.representatives;
  opts.caps = resolve_caps(o, doc);
  report["settings"] = {{"max_degree", n}, {"variant", o.variant}, {"cap_rows", opts.caps.rows},
                        {"cap_cols", opts.caps.cols}};
  Bicomplex cx(doc.diagram.base, n + 1);
  CohomologyReport rep = cohomology_dims(cx, n, opts);
  report["cohomology"] = to_json(cx, rep);
  report["ok"] = rep.integrity;
  return rep.integrity ? ExitCode::ok : ExitCode::failed;
}

int cmd_eval(const Options& o, Json& report) {
  report = header("eval", o);
  report["expression"] = o.expression;
  WorkspaceDocument doc = load_document(o.input);
  require_strict(doc);
  int nerve = o.max_degree.value_or(doc.max_degree) + 1;
  Bicomplex cx(doc.diagram.base, nerve);
  std::map<std::string, Value> env;
  env.emplace("m", structure_m(cx));
  env.emplace("mu", structure_mu(cx));
  for (const auto& [name, j] : doc.cochains) env.insert_or_assign(name, value_from_json(cx, j, "$.cochains." + name));
  for (const auto& file : o.cochain_maps) {
    Json j = load_json(file);
    if (!j.is_object()) throw ParseError(file + ": expected an object of named cochains");
    for (const auto& [name, c] : j.items()) env.insert_or_assign(name, value_from_json(cx, c, file + ":" + name));
  }
  for (const auto& binding : o.named_cochains) {
    auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--cochain expects name=file, got '" + binding + "'");
    std::string file = binding.substr(eq + 1);
    env.insert_or_assign(binding.substr(0, eq), value_from_json(cx, load_json(file), file));
  }
  Evaluator ev(cx, std::move(env), o.seed);
  Named result = ev.evaluate(o.expression);
  Json rj = value_to_json(cx, result.value);
  report["kind"] = std::holds_alternative<bool>(result.value)           ? "bool"
                   : std::holds_alternative<BiCochain>(result.value) ? "bicochain"
                                                                      : "total";
  if (!o.out_file.empty()) {
    std::ofstream out(o.out_file);
    if (!out) throw Error("cannot write " + o.out_file);
    out << rj.dump(2) << '\n';
    report["written"] = o.out_file;
  } else {
    report["result"] = rj;
  }
  if (const auto* b = std::get_if<BiCochain>(&result.value)) report["is_zero"] = b->is_zero();
  if (const auto* t = std::get_if<TotalCochain>(&result.value)) report["is_zero"] = t->is_zero();
  report["ok"] = true;
  return ExitCode::ok;
}

int cmd_deform(const Options& o, Json& report) {
  report = header("deform", o);
  report["first_order"] = o.first_order;
  WorkspaceDocument doc = load_document(o.input);
  if (!validate_document(doc, report).ok()) {
    report["ok"] = false;
    return ExitCode::failed;
  }
  require_strict(doc);
  Bicomplex cx(doc.diagram.base, o.mc ? 4 : 3);
  FirstOrderDeformation d = deformation_from_json(cx, load_json(o.first_order), o.first_order);
  FirstOrderReport fo = check_first_order(cx, d);
  report["check_first_order"] = to_json(fo);
  bool ok = fo.ok();
  if (ok) {
    TruncatedDiagram t = build_truncated(cx, d);
    Report tr = validate(t);
    report["truncated"] = to_json(tr);
    report["truncated"]["skew"] = t.skew;
    report["truncated"]["star_kept"] = t.star_kept;
    ok = tr.ok();
  }
  if (ok && o.mc) {
    McObstruction mc = mc_obstruction(cx, d);
    Json mj;
    mj["variant"] = std::string(to_string(mc.variant));
    mj["bracket_zero"] = mc.bracket.is_zero();
    mj["bracket_closed"] = mc.bracket_closed;
    mj["witness_found"] = mc.candidate.has_value();
    if (mc.candidate) mj["second_order_candidate"] = to_json(cx, *mc.candidate);
    if (d.mdot.is_zero() && !d.udot) {
      if (auto psi = solve_mc_partner(cx, d.mudot)) {
        McVerification v = verify_mc_with_witness(cx, {d.mudot, *psi});
        mj["mc_pair"] = {{"verified", v.ok()}, {"defect_2_1", v.nonzero21}, {"defect_1_2", v.nonzero12}};
      } else {
        mj["mc_pair"] = {{"verified", false}, {"reason", "no (1,1) partner solves the equation"}};
      }
    }
    report["mc"] = std::move(mj);
  }
  report["ok"] = ok;
  return ok ? ExitCode::ok : ExitCode::failed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hochschild bicomplex engine for diagrams of algebras", "cochain-forge"};
  app.require_subcommand(1);
  Options o;
  int max_degree = -1;
  long long cap_rows = -1, cap_cols = -1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "workspace document (JSON, format 1)")->required();
    sub->add_option("--max-degree", max_degree, "maximal total degree");
    sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap-rows", cap_rows, "row cap for assembled matrices");
    sub->add_option("--cap-cols", cap_cols, "column cap for assembled matrices");
    sub->add_option("--seed", o.seed, "seed for randomized operations");
    sub->add_flag("--timing,!--no-timing", o.timing, "include timing in the report (default on)");
  };
  auto* validate = app.add_subcommand("validate", "category, algebra, diagram, skew and declared axiom checks");
  common(validate);
  auto* cohom = app.add_subcommand("cohomology", "dimensions of total or asimplicial cohomology");
  common(cohom);
  cohom->add_option("--variant", o.variant, "full or asimplicial")->check(CLI::IsMember({"full", "asimplicial"}));
  cohom->add_flag("--representatives", o.representatives, "emit cocycles spanning each H^n");
  auto* eval = app.add_subcommand("eval", "evaluate one expression over named cochains");
  common(eval);
  eval->add_option("expression", o.expression, "e.g. bracket(m, m)")->required();
  eval->add_option("--cochains", o.cochain_maps, "JSON file of named cochains");
  eval->add_option("--cochain", o.named_cochains, "name=file for a single cochain");
  eval->add_option("--out", o.out_file, "write the resulting cochain here");
  auto* deform = app.add_subcommand("deform", "first-order deformation checks");
  common(deform);
  deform->add_option("--first-order", o.first_order, "first-order deformation file")->required();
  deform->add_flag("--mc", o.mc, "also run the Maurer-Cartan obstruction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }
  if (max_degree >= 0) o.max_degree = max_degree;
  if (cap_rows >= 0) o.cap_rows = static_cast<std::size_t>(cap_rows);
  if (cap_cols >= 0) o.cap_cols = static_cast<std::size_t>(cap_cols);

  Json report;
  int code = ExitCode::ok;
  auto start = Clock::now();
  try {
    if (validate->parsed()) code = cmd_validate(o, report);
    if (cohom->parsed()) code = cmd_cohomology(o, report);
    if (eval->parsed()) code = cmd_eval(o, report);
    if (deform->parsed()) code = cmd_deform(o, report);
  } catch (const ParseError& e) {
    report["ok"] = false;
    report["error"] = {{"kind", "parse"}, {"message", e.what()}};
    code = ExitCode::parse_failure;
  } catch (const ResourceLimit& e) {
    report["ok"] = false;
    report["error"] = {{"kind", "resource"}, {"degree", e.degree()}, {"message", e.what()}};
    code = ExitCode::resource;
  } catch (const Error& e) {
    report["ok"] = false;
    report["error"] = {{"kind", "failure"}, {"message", e.what()}};
    code = ExitCode::failed;
  }
  if (o.timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report["exit_code"] = code;
  if (o.output == "text")
    out << render_text(report);
  else
    out << report.dump(2) << '\n';
  if (report.contains("error")) err << "error: " << report["error"]["message"].get<std::string>() << '\n';
  return code;
}

}  // namespace cforge::cli
