#include "reptype/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "reptype/oracle.hpp"
#include "reptype/separating.hpp"

namespace reptype {

using nlohmann::json;

// ---- kinds

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::Relation: return "relation";
    case DocKind::Poset: return "poset";
    case DocKind::EqPoset: return "eqposet";
    case DocKind::Dyadic: return "dyadic";
    case DocKind::Graph: return "graph";
    case DocKind::Quiver: return "quiver";
  }
  return "?";
}

std::optional<DocKind> parse_doc_kind(const std::string& s) {
  for (auto k : {DocKind::Relation, DocKind::Poset, DocKind::EqPoset, DocKind::Dyadic,
                 DocKind::Graph, DocKind::Quiver})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// ---- parsing

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}
std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_fail(path.empty() ? "document" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(at(path, key), "missing field");
  return *it;
}

const json& need_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

long long as_int(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    schema_fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return v;
}

// integer >= lo or the string "inf"
ExtNat as_extnat(const json& j, const std::string& path, long long lo) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtNat::inf();
    schema_fail(path, "expected an integer or \"inf\"");
  }
  return ExtNat(static_cast<std::uint64_t>(as_int(j, path, lo, 1LL << 62)));
}

Poset parse_poset(const json& j, const std::string& path) {
  int n = static_cast<int>(as_int(need(j, "n", path), at(path, "n"), 1, 64));
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    const auto& arr = need_array(j["covers"], at(path, "covers"));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string p = at(at(path, "covers"), k);
      if (!arr[k].is_array() || arr[k].size() != 2) schema_fail(p, "expected a pair [i, j]");
      int a = static_cast<int>(as_int(arr[k][0], at(p, 0), 0, n - 1));
      int b = static_cast<int>(as_int(arr[k][1], at(p, 1), 0, n - 1));
      if (a == b) schema_fail(p, "a point cannot lie below itself");
      covers.push_back({a, b});
    }
  }
  try {
    return make_poset(n, covers);
  } catch (const InputError& e) {
    schema_fail(at(path, "covers"), e.what());
  }
}

Relation parse_relation(const json& j) {
  if (j.contains("matrix")) {
    const auto& rows = need_array(j["matrix"], "matrix");
    const int n = static_cast<int>(rows.size());
    if (n == 0) schema_fail("matrix", "needs at least one row");
    Relation R(n);
    for (int i = 0; i < n; ++i) {
      std::string p = at(std::string("matrix"), i);
      if (!rows[i].is_string()) schema_fail(p, "expected a string of 0 and 1");
      auto row = rows[i].get<std::string>();
      if (static_cast<int>(row.size()) != n)
        schema_fail(p, "row length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
      for (int k = 0; k < n; ++k) {
        if (row[k] != '0' && row[k] != '1') schema_fail(p, "characters must be 0 or 1");
        R.set(i, k, row[k] == '1');
      }
    }
    return R;
  }
  int n = static_cast<int>(as_int(need(j, "n", ""), "n", 1, 64));
  Relation R(n);
  const auto& pairs = need_array(need(j, "pairs", ""), "pairs");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string p = at(std::string("pairs"), k);
    if (!pairs[k].is_array() || pairs[k].size() != 2) schema_fail(p, "expected a pair [i, j]");
    R.set(static_cast<int>(as_int(pairs[k][0], at(p, 0), 0, n - 1)),
          static_cast<int>(as_int(pairs[k][1], at(p, 1), 0, n - 1)));
  }
  return R;
}

EquivPoset parse_eqposet(const json& j, const std::string& path) {
  Poset base = parse_poset(j, path);
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(base.size(), 0);
  if (j.contains("classes")) {
    const auto& arr = need_array(j["classes"], at(path, "classes"));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string p = at(at(path, "classes"), k);
      const auto& cl = need_array(arr[k], p);
      std::vector<int> members;
      for (std::size_t m = 0; m < cl.size(); ++m) {
        int s = static_cast<int>(as_int(cl[m], at(p, m), 0, base.size() - 1));
        if (seen[s]) schema_fail(at(p, m), "point " + std::to_string(s) + " listed twice");
        seen[s] = 1;
        members.push_back(s);
      }
      classes.push_back(std::move(members));
    }
  }
  try {
    return EquivPoset(std::move(base), classes);
  } catch (const InputError& e) {
    schema_fail(at(path, "classes"), e.what());
  }
}

DyadicSet parse_dyadic(const json& j, const std::string& path) {
  Poset base = parse_poset(j, path);
  std::vector<std::vector<PointPair>> classes;
  if (j.contains("pair_classes")) {
    const auto& arr = need_array(j["pair_classes"], at(path, "pair_classes"));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string p = at(at(path, "pair_classes"), k);
      const auto& cl = need_array(arr[k], p);
      std::vector<PointPair> members;
      for (std::size_t m = 0; m < cl.size(); ++m) {
        std::string q = at(p, m);
        if (!cl[m].is_array() || cl[m].size() != 2) schema_fail(q, "expected a pair [s, t]");
        int s = static_cast<int>(as_int(cl[m][0], at(q, 0), 0, base.size() - 1));
        int t = static_cast<int>(as_int(cl[m][1], at(q, 1), 0, base.size() - 1));
        if (!base.le(s, t)) schema_fail(q, "pair is not of the form s <= t");
        members.push_back({s, t});
      }
      classes.push_back(std::move(members));
    }
  }
  // axiom violations and non-dyadic sets keep their own error types
  return DyadicSet(BiequivPoset(std::move(base), classes));
}

FWeight parse_fweight(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    long long v = as_int(j, path, 1, 1LL << 62);
    return FWeight::rational(Rat(static_cast<long>(v)));
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf") return FWeight::inf();
    Rat r;
    try {
      r = parse_rat(s);
    } catch (const std::exception&) {
      schema_fail(path, "expected an integer, a fraction string or \"inf\"");
    }
    if (r < 1) schema_fail(path, "edge weight below 1");
    return FWeight::rational(r);
  }
  schema_fail(path, "expected an integer, a fraction string or \"inf\"");
}

// a vertex reference: a name from the list or a 0-based index
int vertex_ref(const json& j, const std::vector<std::string>& names, const std::string& path) {
  if (j.is_string()) {
    auto it = std::find(names.begin(), names.end(), j.get<std::string>());
    if (it == names.end()) schema_fail(path, "unknown vertex \"" + j.get<std::string>() + "\"");
    return static_cast<int>(it - names.begin());
  }
  return static_cast<int>(as_int(j, path, 0, static_cast<long long>(names.size()) - 1));
}

std::vector<std::string> vertex_names(const json& j) {
  const auto& arr = need_array(need(j, "vertices", ""), "vertices");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) schema_fail(at(std::string("vertices"), k), "expected a name");
    auto s = arr[k].get<std::string>();
    if (std::find(names.begin(), names.end(), s) != names.end())
      schema_fail(at(std::string("vertices"), k), "duplicate vertex \"" + s + "\"");
    names.push_back(s);
  }
  if (names.empty()) schema_fail("vertices", "needs at least one vertex");
  return names;
}

LabeledGraph parse_graph(const json& j) {
  auto names = vertex_names(j);
  LabeledGraph G;
  for (const auto& s : names) G.add_vertex(s);
  if (j.contains("v")) {
    const auto& v = j["v"];
    if (!v.is_object()) schema_fail("v", "expected an object keyed by vertex name");
    for (auto it = v.begin(); it != v.end(); ++it) {
      int x = G.find(it.key());
      if (x < 0) schema_fail(at(std::string("v"), it.key()), "unknown vertex");
      G.set_v(x, as_extnat(it.value(), at(std::string("v"), it.key()), 1));
    }
  }
  if (j.contains("edges")) {
    const auto& arr = need_array(j["edges"], "edges");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string p = at(std::string("edges"), k);
      const auto& ends = need(arr[k], "ends", p);
      if (!ends.is_array() || ends.size() != 2) schema_fail(at(p, "ends"), "expected two vertices");
      int a = vertex_ref(ends[0], names, at(at(p, "ends"), 0));
      int b = vertex_ref(ends[1], names, at(at(p, "ends"), 1));
      FWeight f = arr[k].contains("f") ? parse_fweight(arr[k]["f"], at(p, "f")) : FWeight{};
      G.add_edge(a, b, f);
    }
  }
  return G;
}

Marking parse_marking(const json& j, const std::string& path) {
  const auto& kind = need(j, "kind", path);
  if (!kind.is_string()) schema_fail(at(path, "kind"), "expected a string");
  auto k = kind.get<std::string>();
  if (k == "linear") return Marking::linear(static_cast<int>(as_int(need(j, "n", path), at(path, "n"), 1, 1 << 30)));
  if (k == "semilinear") return Marking::semilinear(parse_eqposet(j, path));
  if (k == "eqposet") return Marking::eq_poset(parse_eqposet(j, path));
  if (k == "dyadic") return Marking::dyadic_set(parse_dyadic(j, path));
  schema_fail(at(path, "kind"), "unknown marking kind \"" + k + "\"");
}

MarkedQuiver parse_quiver(const json& j) {
  const auto& arrows_j = need_array(need(j, "arrows", ""), "arrows");
  std::vector<std::string> names;
  if (j.contains("vertices")) {
    names = vertex_names(j);
  } else {
    auto note = [&](const json& r) {
      if (r.is_string() && std::find(names.begin(), names.end(), r.get<std::string>()) == names.end())
        names.push_back(r.get<std::string>());
    };
    for (const auto& a : arrows_j)
      if (a.is_object()) {
        if (a.contains("t")) note(a["t"]);
        if (a.contains("h")) note(a["h"]);
      }
  }
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < arrows_j.size(); ++k) {
    std::string p = at(std::string("arrows"), k);
    arrows.push_back({vertex_ref(need(arrows_j[k], "t", p), names, at(p, "t")),
                      vertex_ref(need(arrows_j[k], "h", p), names, at(p, "h"))});
  }
  std::vector<Marking> marks(names.size(), Marking::linear(1));
  if (j.contains("marks")) {
    const auto& m = j["marks"];
    if (!m.is_object()) schema_fail("marks", "expected an object keyed by vertex name");
    for (auto it = m.begin(); it != m.end(); ++it) {
      std::string p = at(std::string("marks"), it.key());
      auto pos = std::find(names.begin(), names.end(), it.key());
      if (pos == names.end()) schema_fail(p, "unknown vertex");
      marks[pos - names.begin()] = parse_marking(it.value(), p);
    }
  }
  return MarkedQuiver{Quiver(names, arrows), std::move(marks)};
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Document parse_document(const std::string& text, std::optional<DocKind> fallback) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw ParseError(line_col(text, e.byte) + ": " +
                     (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  if (!j.is_object()) schema_fail("document", "expected a JSON object");
  DocKind kind;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) schema_fail("kind", "expected a string");
    auto k = parse_doc_kind(j["kind"].get<std::string>());
    if (!k) schema_fail("kind", "unknown kind \"" + j["kind"].get<std::string>() + "\"");
    kind = *k;
  } else if (fallback) {
    kind = *fallback;
  } else {
    schema_fail("kind", "missing field");
  }
  Document d;
  d.kind = kind;
  switch (kind) {
    case DocKind::Relation: d.value = parse_relation(j); break;
    case DocKind::Poset: d.value = parse_poset(j, ""); break;
    case DocKind::EqPoset: d.value = parse_eqposet(j, ""); break;
    case DocKind::Dyadic: d.value = parse_dyadic(j, ""); break;
    case DocKind::Graph: d.value = parse_graph(j); break;
    case DocKind::Quiver: d.value = parse_quiver(j); break;
  }
  return d;
}

Document read_document(const std::string& path, std::optional<DocKind> fallback) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), fallback);
}

// ---- rendering

namespace {

json covers_json(const Poset& P) {
  json c = json::array();
  for (auto [a, b] : P.covers()) c.push_back({a, b});
  return c;
}

void put_eqposet(json& j, const EquivPoset& S) {
  j["n"] = S.size();
  j["covers"] = covers_json(S.base());
  json cl = json::array();
  for (const auto& c : S.classes())
    if (c.size() > 1) cl.push_back(c);
  j["classes"] = cl;
}

void put_dyadic(json& j, const DyadicSet& D) {
  j["n"] = D.size();
  j["covers"] = covers_json(D.base());
  json cl = json::array();
  for (const auto& c : D.inner().pair_classes()) {
    json members = json::array();
    for (auto [s, t] : c) members.push_back({s, t});
    cl.push_back(members);
  }
  j["pair_classes"] = cl;
}

json extnat_json(const ExtNat& e) {
  if (e.is_inf()) return "inf";
  return e.value();
}

json fweight_json(const FWeight& f) {
  if (f.is_inf()) return "inf";
  if (f.kind == FWeight::Kind::Rational && f.value.get_den() == 1) return f.value.get_num().get_si();
  return to_string(f);
}

json marking_json(const Marking& m) {
  json j;
  switch (m.kind) {
    case Marking::Kind::Linear:
      j["kind"] = "linear";
      j["n"] = m.n;
      break;
    case Marking::Kind::Semilinear:
      j["kind"] = "semilinear";
      put_eqposet(j, m.eqposet);
      break;
    case Marking::Kind::EqPoset:
      j["kind"] = "eqposet";
      put_eqposet(j, m.eqposet);
      break;
    case Marking::Kind::Dyadic:
      j["kind"] = "dyadic";
      put_dyadic(j, *m.dyadic);
      break;
  }
  return j;
}

}  // namespace

std::string render(const Document& d) {
  json j;
  j["kind"] = to_string(d.kind);
  switch (d.kind) {
    case DocKind::Relation: {
      const auto& R = std::get<Relation>(d.value);
      json rows = json::array();
      for (int i = 0; i < R.size(); ++i) {
        std::string row;
        for (int k = 0; k < R.size(); ++k) row += R(i, k) ? '1' : '0';
        rows.push_back(row);
      }
      j["matrix"] = rows;
      break;
    }
    case DocKind::Poset: {
      const auto& P = std::get<Poset>(d.value);
      j["n"] = P.size();
      j["covers"] = covers_json(P);
      break;
    }
    case DocKind::EqPoset: put_eqposet(j, std::get<EquivPoset>(d.value)); break;
    case DocKind::Dyadic: put_dyadic(j, std::get<DyadicSet>(d.value)); break;
    case DocKind::Graph: {
      const auto& G = std::get<LabeledGraph>(d.value);
      json names = json::array(), edges = json::array(), v = json::object();
      for (int x = 0; x < G.size(); ++x) {
        names.push_back(G.name(x));
        if (G.v(x) != ExtNat(1)) v[G.name(x)] = extnat_json(G.v(x));
      }
      for (const auto& E : G.edges()) {
        json e;
        e["ends"] = {G.name(E.a), G.name(E.b)};
        if (!E.f.is_one()) e["f"] = fweight_json(E.f);
        edges.push_back(e);
      }
      j["vertices"] = names;
      j["edges"] = edges;
      j["v"] = v;
      break;
    }
    case DocKind::Quiver: {
      const auto& Q = std::get<MarkedQuiver>(d.value);
      const auto& names = Q.quiver.vertices();
      json arrows = json::array(), marks = json::object();
      for (const auto& a : Q.quiver.arrows()) arrows.push_back({{"t", names[a.tail]}, {"h", names[a.head]}});
      for (std::size_t x = 0; x < names.size(); ++x) marks[names[x]] = marking_json(Q.marks[x]);
      j["vertices"] = names;
      j["arrows"] = arrows;
      j["marks"] = marks;
      break;
    }
  }
  return j.dump();
}

// ---- formatting

namespace {

std::string decimal(double d, bool long_decimal) {
  char buf[64];
  std::snprintf(buf, sizeof buf, long_decimal ? "%.15g" : "%.6g", d);
  return buf;
}

bool integral(double d) { return std::isfinite(d) && std::floor(d) == d; }

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string type_text(RepType t) { return to_string(t); }

}  // namespace

std::string format_value(const Rat& r, bool long_decimal) {
  std::string s = to_string(r);
  if (r.get_den() != 1) s += " (" + decimal(r.get_d(), long_decimal) + ")";
  return s;
}

std::string format_value(const ExtRat& r, bool long_decimal) {
  return r.inf ? "inf" : format_value(r.value, long_decimal);
}

std::string format_value(const WeightSum& w, bool long_decimal) {
  if (w.inf) return "inf";
  std::string s = to_string(w);
  double d = to_double(w);
  if (!integral(d) || !w.value.is_rational()) s += " (" + decimal(d, long_decimal) + ")";
  return s;
}

Report guarded(const std::function<Report()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return {std::string("error: ") + e.what() + "\n", kExitInput};
  } catch (const NonIntegral& e) {
    return {std::string("error: ") + e.what() + "\n", kExitInput};
  } catch (const CapExceeded& e) {
    return {std::string("cap exceeded: ") + e.what() + "\n", kExitCap};
  } catch (const RefinementCapExceeded& e) {
    return {std::string("cap exceeded: ") + e.what() + "\n", kExitCap};
  }
}

// ---- commands

namespace {

Relation relation_of(const Document& d) {
  if (d.kind == DocKind::Relation) return std::get<Relation>(d.value);
  if (d.kind == DocKind::Poset) return std::get<Poset>(d.value).to_relation();
  throw SchemaError("kind: expected a relation or poset document, found " + to_string(d.kind));
}

int cap_or(const Flags& fl, int dflt) { return fl.cap.value_or(dflt); }

DyadicOptions dyadic_options(const Flags& fl) {
  DyadicOptions o;
  o.order = fl.edge_order;
  o.scope = fl.condA_scope;
  o.cap = cap_or(fl, kDefaultPosetCap);
  return o;
}

std::string graph_kind_text(GraphClass::Kind k) {
  switch (k) {
    case GraphClass::Kind::Dynkin: return "Dynkin";
    case GraphClass::Kind::ExtendedDynkin: return "extended Dynkin";
    case GraphClass::Kind::Wild: return "wild";
    case GraphClass::Kind::FiniteType: return "finite type";
    case GraphClass::Kind::AffineType: return "affine type";
    case GraphClass::Kind::Neither: return "neither finite nor affine";
  }
  return "?";
}

// vertex attaining the maximal rho-degree, compared exactly against the
// rational bound 4 first and by value otherwise
int argmax_degree(const std::vector<WeightSum>& deg) {
  int best = 0;
  for (int x = 1; x < static_cast<int>(deg.size()); ++x) {
    if (deg[best].inf) break;
    if (deg[x].inf || to_double(deg[x]) > to_double(deg[best])) best = x;
  }
  return best;
}

std::string degree_lines(const LabeledGraph& G, const std::vector<WeightSum>& deg, bool long_decimal) {
  std::string out;
  for (int x = 0; x < G.size(); ++x)
    out += "  " + G.name(x) + ": " + format_value(deg[x], long_decimal) + "\n";
  return out;
}

Report classify_graph(const LabeledGraph& G, const Flags& fl, GraphMode mode) {
  Report rep;
  if (mode == GraphMode::Integral) {
    GraphClass c = classify_integral_fgraph(G);
    std::vector<WeightSum> deg;
    for (int x = 0; x < G.size(); ++x) deg.push_back(rho_degree(G, x));
    int x = argmax_degree(deg);
    rep.text = graph_kind_text(c.kind) + (c.name.empty() ? "" : " " + c.name) + "; max ρ-degree " +
               format_value(c.max_degree, fl.decimal) + " at " + G.name(x) + "\n";
    if (fl.witness) rep.text += degree_lines(G, deg, fl.decimal);
    if (c.kind == GraphClass::Kind::Wild) rep.exit_code = kExitVerdict;
    return rep;
  }
  // an omitted Coxeter label reads as 3, the usual diagram convention
  LabeledGraph L;
  for (int x = 0; x < G.size(); ++x) L.add_vertex(G.name(x), G.v(x));
  for (const auto& E : G.edges()) L.add_edge(E.a, E.b, E.f.is_one() ? FWeight::rational(Rat(3)) : E.f);
  LabeledGraph H = hat_transform(L);
  std::vector<WeightSum> deg;
  for (int x = 0; x < H.size(); ++x) deg.push_back(rho_degree(H, x));
  auto parts = classify_coxeter_components(L);
  for (const auto& c : parts) {
    rep.text += graph_kind_text(c.kind) + (c.name.empty() ? "" : " " + c.name) +
                "; max ρ-degree " + format_value(c.max_degree, fl.decimal) + "\n";
    if (c.kind == GraphClass::Kind::Neither) rep.exit_code = kExitVerdict;
  }
  if (parts.size() == 1) {
    rep.text.pop_back();
    rep.text += " at " + G.name(argmax_degree(deg)) + "\n";
  }
  if (fl.witness) rep.text += degree_lines(G, deg, fl.decimal);
  return rep;
}

}  // namespace

Report cmd_norm(const Document& d, const Flags& fl) {
  Relation R = relation_of(d);
  auto c = norm(R, cap_or(fl, kDefaultNormCap));
  Report rep{"norm = " + format_value(c.value, fl.decimal) + "\n"};
  if (fl.witness) {
    std::string w = "witness = (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) w += (i ? ", " : "") + to_string(c.witness[i]);
    rep.text += w + "); support " + set_text(c.support) + "\n";
  }
  return rep;
}

Report cmd_p(const Document& d, const Flags& fl) {
  auto p = p_value(relation_of(d), cap_or(fl, kDefaultNormCap));
  Report rep{"P = " + format_value(p.p, fl.decimal) + "\n"};
  if (p.non_reflexive_warning) rep.text += "warning: relation is not reflexive\n";
  return rep;
}

Report cmd_faithful(const Document& d, const Flags& fl) {
  auto f = is_p_faithful(relation_of(d), cap_or(fl, kDefaultNormCap));
  if (f.faithful) return {"P-faithful\n"};
  return {"not P-faithful; P(S - {" + std::to_string(*f.witness) + "}) = P(S)\n"};
}

Report cmd_rho(const std::vector<std::string>& args, const Flags& fl) {
  if (args.empty()) throw InputError("rho needs at least one argument");
  std::vector<ExtNat> xs;
  for (const auto& a : args) xs.push_back(parse_extnat(a));
  return {format_value(rho_tuple(xs), fl.decimal) + "\n"};
}

Report cmd_mu(const std::vector<std::string>& args, const Flags&) {
  if (args.size() != 3) throw InputError("mu takes exactly three arguments");
  return {to_string(mu3(parse_extnat(args[0]), parse_extnat(args[1]), parse_extnat(args[2]))) + "\n"};
}

Report cmd_classify(const Document& d, const Flags& fl, GraphMode mode) {
  Report rep;
  switch (d.kind) {
    case DocKind::Relation:
      throw SchemaError("kind: classify does not accept relation documents");
    case DocKind::Poset: {
      const auto& S = std::get<Poset>(d.value);
      int cap = cap_or(fl, kDefaultPosetCap);
      RepType t = classify_poset(S, cap);
      rep.text = type_text(t) + "; rho = " + format_value(ExtRat{false, rho_poset(S, cap)}, fl.decimal);
      if (t != RepType::Finite) {
        bool want_k = t == RepType::Tame;
        for (const auto& hit : contains_critical(S, true, cap)) {
          bool is_k = false;
          for (const auto& c : critical_posets())
            if (c.name == hit.name) is_k = c.tame_boundary;
          if (is_k != want_k) continue;
          rep.text += "; contains " + hit.name + " at " + set_text(hit.image);
          break;
        }
      }
      rep.text += "\n";
      if (t == RepType::Wild) rep.exit_code = kExitVerdict;
      return rep;
    }
    case DocKind::EqPoset: {
      const auto& S = std::get<EquivPoset>(d.value);
      int cap = cap_or(fl, kDefaultPosetCap);
      RepType t = classify_eqposet(S, cap);
      rep.text = type_text(t) + "; rho = " + format_value(rho_eqposet(S, cap), fl.decimal) +
                 "; mu = " + format_value(mu_eqposet(S), fl.decimal) + "\n";
      if (t == RepType::Wild) rep.exit_code = kExitVerdict;
      return rep;
    }
    case DocKind::Dyadic: {
      const auto& D = std::get<DyadicSet>(d.value);
      auto opt = dyadic_options(fl);
      auto v = classify_dyadic(D, opt);
      std::string rho = format_value(rho_hat(D.inner(), opt.cap), fl.decimal);
      if (v.finite) {
        rep.text = "Finite; rho^ = " + rho + "\n";
      } else {
        rep.text = "NotFinite; rho^ = " + rho + "; " + v.reason + "\n";
        rep.exit_code = kExitVerdict;
      }
      if (v.mu_case) rep.text += "mu = 4 case " + std::to_string(*v.mu_case) + "\n";
      return rep;
    }
    case DocKind::Graph: return classify_graph(std::get<LabeledGraph>(d.value), fl, mode);
    case DocKind::Quiver: {
      auto v = classify(std::get<MarkedQuiver>(d.value));
      rep.text = to_string(v) + "; route " + v.route + "\n";
      if (!v.note.empty()) rep.text += "note: " + v.note + "\n";
      if (!v.finite && (!v.type || *v.type == RepType::Wild)) rep.exit_code = kExitVerdict;
      return rep;
    }
  }
  return rep;
}

Report cmd_catalog(CatalogList list, int max_l, const Flags& fl) {
  if (max_l < 1) throw InputError("max l must be positive");
  Report rep;
  bool coxeter = list == CatalogList::III || list == CatalogList::IV;
  for (const auto& e : catalog(list, max_l)) {
    GraphClass c = coxeter ? classify_coxeter(e.graph) : classify_integral_fgraph(e.graph);
    rep.text += e.name + ": " + std::to_string(e.graph.size()) + " vertices; max ρ-degree " +
                format_value(c.max_degree, fl.decimal) + "\n";
    if (fl.witness) rep.text += "  " + render({DocKind::Graph, e.graph}) + "\n";
  }
  return rep;
}

Report cmd_verify_conjecture1(int max_n, const Flags& fl) {
  auto r = verify_conjecture1(max_n, cap_or(fl, 7));
  Report rep;
  for (int n = 1; n <= max_n; ++n)
    rep.text += "n = " + std::to_string(n) + ": " + std::to_string(r.posets_checked[n]) +
                " connected posets, " + std::to_string(r.faithful[n]) + " P-faithful\n";
  rep.text += "counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
  for (const auto& P : r.counterexamples) rep.text += "  " + render({DocKind::Poset, P}) + "\n";
  if (!r.counterexamples.empty()) rep.exit_code = kExitVerdict;
  return rep;
}

Report cmd_critical_scan(const Document& d, const Flags& fl) {
  Report rep;
  if (d.kind == DocKind::Poset) {
    auto hits = contains_critical(std::get<Poset>(d.value), !fl.witness, cap_or(fl, kDefaultPosetCap));
    for (const auto& h : hits) rep.text += h.name + " at " + set_text(h.image) + "\n";
    if (hits.empty()) rep.text = "no critical subposets\n";
    return rep;
  }
  if (d.kind == DocKind::Dyadic) {
    const auto& D = std::get<DyadicSet>(d.value);
    bool crit = is_critical_dyadic(D, dyadic_options(fl), cap_or(fl, kCriticalCap));
    rep.text = std::string(crit ? "critical" : "not critical") + "; biequivalence " +
               (is_transitive_biequiv(D.inner()) ? "transitive" : "not transitive") + "\n";
    return rep;
  }
  throw SchemaError("kind: critical-scan takes a poset or dyadic document");
}

Report cmd_critical_scan_dyadic(int n, const Flags& fl) {
  if (n < 1) throw InputError("n must be positive");
  auto opt = dyadic_options(fl);
  long long total = 0, critical = 0, intransitive = 0;
  std::string examples;
  for_each_dyadic_set(
      n,
      [&](const DyadicSet& D) {
        ++total;
        if (!is_critical_dyadic(D, opt, cap_or(fl, kCriticalCap))) return;
        ++critical;
        if (!is_transitive_biequiv(D.inner())) {
          ++intransitive;
          examples += "  " + render({DocKind::Dyadic, D}) + "\n";
        }
        if (fl.witness) examples += "  critical: " + render({DocKind::Dyadic, D}) + "\n";
      },
      cap_or(fl, 7));
  Report rep{"dyadic sets on " + std::to_string(n) + " points: " + std::to_string(total) +
             "; critical: " + std::to_string(critical) + "; critical with intransitive biequivalence: " +
             std::to_string(intransitive) + "\n" + examples};
  if (intransitive) rep.exit_code = kExitVerdict;
  return rep;
}

Report cmd_oracle_norm(const Document& d, int depth, const Flags& fl) {
  Relation R = relation_of(d);
  auto num = numeric_norm(R, depth);
  auto exact = norm(R, cap_or(fl, kDefaultNormCap));
  double gap = num.value - exact.value.get_d();
  return {"numeric norm <= " + decimal(num.value, true) + " at depth " + std::to_string(depth) +
          " (" + std::to_string(num.iterations) + " probes, final step " + decimal(num.residual, false) +
          ")\nexact norm = " + format_value(exact.value, fl.decimal) + "; gap " + decimal(gap, false) +
          "\n"};
}

}  // namespace reptype
