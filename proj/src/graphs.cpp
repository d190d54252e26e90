#include "reptype/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

#include "reptype/separating.hpp"

namespace reptype {

// ---- weights

FWeight FWeight::rational(Rat r) {
  if (r < 1) throw InputError("edge weight below 1: " + to_string(r));
  FWeight w;
  w.value = std::move(r);
  return w;
}

FWeight FWeight::inf() {
  FWeight w;
  w.kind = Kind::Inf;
  return w;
}

FWeight FWeight::of_hat(HatValue h) {
  FWeight w;
  w.kind = Kind::Hat;
  w.hat = std::move(h);
  return w;
}

FWeight FWeight::of(const ExtNat& n) {
  if (n.is_inf()) return inf();
  return rational(Rat(static_cast<unsigned long>(n.value())));
}

bool FWeight::is_one() const {
  switch (kind) {
    case Kind::Rational: return value == 1;
    case Kind::Inf: return false;
    case Kind::Hat: return hat.equals(Rat(1));
  }
  return false;
}

bool FWeight::is_integral() const {
  return kind == Kind::Inf || (kind == Kind::Rational && value.get_den() == 1);
}

std::optional<ExtNat> FWeight::as_extnat() const {
  if (kind == Kind::Inf) return ExtNat::inf();
  if (kind == Kind::Rational && value.get_den() == 1) return ExtNat(value.get_num().get_ui());
  return std::nullopt;
}

std::string to_string(const FWeight& w) {
  switch (w.kind) {
    case FWeight::Kind::Rational: return to_string(w.value);
    case FWeight::Kind::Inf: return "inf";
    case FWeight::Kind::Hat: return "hat:" + to_string(w.hat);
  }
  return {};
}

WeightSum& WeightSum::operator+=(const WeightSum& o) {
  inf = inf || o.inf;
  if (!inf) value += o.value;
  return *this;
}

std::strong_ordering compare(const WeightSum& a, const Rat& b) {
  if (a.inf) return std::strong_ordering::greater;
  return rat_cmp(a.value, b);
}

std::string to_string(const WeightSum& w) { return w.inf ? "inf" : to_string(w.value); }

double to_double(const WeightSum& w) {
  return w.inf ? std::numeric_limits<double>::infinity() : to_double(w.value);
}

static WeightSum scaled(const FWeight& f, const Rat& d) {
  switch (f.kind) {
    case FWeight::Kind::Rational: return {false, RealSum(Rat(f.value * d))};
    case FWeight::Kind::Inf: return WeightSum::infinity();
    case FWeight::Kind::Hat: return {false, d * RealSum::of(f.hat)};
  }
  return {};
}

// ---- graph

LabeledGraph::LabeledGraph(int n) {
  for (int i = 0; i < n; ++i) add_vertex();
}

int LabeledGraph::add_vertex(std::string name, ExtNat v) {
  if (v < ExtNat(1)) throw InputError("vertex weight below 1");
  int id = size();
  if (name.empty()) name = "x" + std::to_string(id);
  if (find(name) >= 0) throw InputError("duplicate vertex name: " + name);
  v_.push_back(v);
  names_.push_back(std::move(name));
  inc_.emplace_back();
  return id;
}

int LabeledGraph::add_edge(int a, int b, FWeight f) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw InputError("edge endpoint out of range");
  int id = static_cast<int>(edges_.size());
  edges_.push_back({a, b, std::move(f)});
  inc_[a].push_back(id);
  if (b != a) inc_[b].push_back(id);
  return id;
}

void LabeledGraph::set_v(int x, ExtNat v) {
  if (v < ExtNat(1)) throw InputError("vertex weight below 1");
  v_.at(x) = v;
}

int LabeledGraph::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool LabeledGraph::all_v_one() const {
  return std::all_of(v_.begin(), v_.end(), [](const ExtNat& v) { return v == ExtNat(1); });
}

// Vertices reachable from start without crossing edge `skip`.
static std::vector<int> reach(const LabeledGraph& G, int start, int skip) {
  std::vector<char> seen(G.size(), 0);
  std::vector<int> out{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int e : G.incident(out[i])) {
      if (e == skip) continue;
      int w = G.edge(e).other(out[i]);
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const LabeledGraph& G) {
  return G.size() > 0 && static_cast<int>(reach(G, 0, -1).size()) == G.size();
}

int degree(const LabeledGraph& G, int x) { return static_cast<int>(G.incident(x).size()); }

WeightSum f_degree(const LabeledGraph& G, int x) {
  WeightSum s;
  for (int e : G.incident(x)) s += scaled(G.edge(e).f, Rat(1));
  return s;
}

bool is_cyclic_edge(const LabeledGraph& G, int e) {
  const GraphEdge& E = G.edge(e);
  if (E.loop()) return true;
  auto r = reach(G, E.a, e);
  return std::binary_search(r.begin(), r.end(), E.b);
}

std::vector<int> tail_component(const LabeledGraph& G, int y, int e) {
  if (is_cyclic_edge(G, e)) throw InputError("tail of a cyclic edge");
  return reach(G, y, e);
}

// The tail is a path: a tree (edges = vertices - 1) with degrees <= 2 inside.
static bool tail_is_path(const LabeledGraph& G, const std::vector<int>& tail, int e) {
  std::size_t inner_edges = 0;
  for (int z : tail) {
    int d = 0;
    for (int a : G.incident(z)) {
      if (a == e) continue;
      ++d;
      const GraphEdge& E = G.edge(a);
      if (E.loop() || z < E.other(z)) ++inner_edges;
    }
    if (d > 2) return false;
  }
  return inner_edges + 1 == tail.size();
}

bool is_simple_pair(const LabeledGraph& G, int x, int e) {
  const GraphEdge& E = G.edge(e);
  if (E.a != x && E.b != x) throw InputError("edge not incident to vertex");
  if (E.loop() || is_cyclic_edge(G, e)) return false;
  int y = E.other(x);
  if (degree(G, y) > 2) return false;
  return tail_is_path(G, reach(G, y, e), e);
}

bool is_vf_simple(const LabeledGraph& G, int x, int e) {
  if (!is_simple_pair(G, x, e)) return false;
  int y = G.edge(e).other(x);
  for (int z : reach(G, y, e)) {
    if (degree(G, z) != 1 && G.v(z) != ExtNat(1)) return false;
    for (int a : G.incident(z))
      if (a != e && !G.edge(a).f.is_one()) return false;
  }
  return true;
}

Rat partial_degree(const LabeledGraph& G, int x, int e) {
  const GraphEdge& E = G.edge(e);
  if (E.a != x && E.b != x) throw InputError("edge not incident to vertex");
  if (E.loop()) return Rat(4);
  if (!is_vf_simple(G, x, e)) return Rat(2);
  ExtNat total(0);
  for (int z : reach(G, E.other(x), e)) total = total + G.v(z);
  return rho_point(total);
}

WeightSum rho_degree(const LabeledGraph& G, int x) {
  WeightSum s;
  const ExtNat& v = G.v(x);
  if (v != ExtNat(1)) s.value = RealSum(rho_point(v - ExtNat(1)));
  for (int e : G.incident(x)) s += scaled(G.edge(e).f, partial_degree(G, x, e));
  return s;
}

LabeledGraph expand_vgraph(const LabeledGraph& G) {
  for (const auto& E : G.edges())
    if (!E.f.is_one()) throw InputError("expansion needs f = 1 on every edge");
  LabeledGraph H;
  for (int x = 0; x < G.size(); ++x) H.add_vertex(G.name(x));
  for (const auto& E : G.edges()) H.add_edge(E.a, E.b, E.f);
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int k = 1; H.find(name) >= 0; ++k) name = base + "_" + std::to_string(k);
    return H.add_vertex(name);
  };
  for (int x = 0; x < G.size(); ++x) {
    const ExtNat& v = G.v(x);
    if (v.is_inf()) {
      H.add_edge(x, fresh("b1^" + G.name(x)));
      H.add_edge(x, fresh("b2^" + G.name(x)));
    } else {
      int prev = x;
      for (std::uint64_t i = 2; i <= v.value(); ++i) {
        int a = fresh("a" + std::to_string(i) + "^" + G.name(x));
        H.add_edge(prev, a);
        prev = a;
      }
    }
  }
  return H;
}

// ---- Coxeter graphs

static void check_coxeter(const LabeledGraph& G) {
  std::map<std::pair<int, int>, int> seen;
  for (const auto& E : G.edges()) {
    if (E.loop()) throw NotCoxeter("Coxeter graph with a loop");
    auto key = std::minmax(E.a, E.b);
    if (seen[{key.first, key.second}]++) throw NotCoxeter("Coxeter graph with parallel edges");
    auto m = E.f.as_extnat();
    if (!m || (!m->is_inf() && m->value() < 3))
      throw NotCoxeter("Coxeter label must be an integer >= 3 or inf, got " + to_string(E.f));
  }
  if (!G.all_v_one()) throw NotCoxeter("Coxeter graph with vertex weights");
}

LabeledGraph hat_transform(const LabeledGraph& G) {
  check_coxeter(G);
  LabeledGraph H;
  for (int x = 0; x < G.size(); ++x) H.add_vertex(G.name(x));
  for (const auto& E : G.edges()) H.add_edge(E.a, E.b, FWeight::of_hat(hat_of_label(*E.f.as_extnat())));
  return H;
}

// ---- classification

std::string to_string(GraphClass::Kind k) {
  switch (k) {
    case GraphClass::Kind::Dynkin: return "Dynkin";
    case GraphClass::Kind::ExtendedDynkin: return "ExtendedDynkin";
    case GraphClass::Kind::Wild: return "Wild";
    case GraphClass::Kind::FiniteType: return "FiniteType";
    case GraphClass::Kind::AffineType: return "AffineType";
    case GraphClass::Kind::Neither: return "Neither";
  }
  return {};
}

// -1: every rho-degree < 4, 0: maximum exactly 4, 1: some degree > 4.
static int degree_verdict(const LabeledGraph& G, WeightSum& max_out) {
  int verdict = -1;
  bool first = true;
  for (int x = 0; x < G.size(); ++x) {
    WeightSum d = rho_degree(G, x);
    auto c = compare(d, Rat(4));
    if (c > 0) verdict = 1;
    else if (c == 0 && verdict < 0) verdict = 0;
    if (first || d.inf || (!max_out.inf && !d.inf && to_double(d) > to_double(max_out))) {
      max_out = d;
      first = false;
    }
  }
  return verdict;
}

static std::string require_name(const LabeledGraph& G, CatalogList list) {
  auto name = catalog_name(G, list);
  if (!name) throw std::logic_error("degree test and catalog disagree: no catalog match");
  return *name;
}

GraphClass classify_integral_fgraph(const LabeledGraph& G) {
  if (G.size() == 0) throw InputError("empty graph");
  if (!is_connected(G)) throw Disconnected("graph is not connected");
  if (!G.all_v_one()) throw InputError("integral f-graph needs v = 1 everywhere");
  for (const auto& E : G.edges())
    if (!E.f.is_integral()) throw InputError("f-graph label is not integral: " + to_string(E.f));
  GraphClass out;
  int verdict = degree_verdict(G, out.max_degree);
  if (verdict > 0) {
    out.kind = GraphClass::Kind::Wild;
  } else if (verdict == 0) {
    out.kind = GraphClass::Kind::ExtendedDynkin;
    out.name = require_name(G, CatalogList::II);
  } else {
    out.kind = GraphClass::Kind::Dynkin;
    out.name = require_name(G, CatalogList::I);
  }
  return out;
}

GraphClass classify_coxeter(const LabeledGraph& G) {
  if (G.size() == 0) throw InputError("empty graph");
  LabeledGraph H = hat_transform(G);
  if (!is_connected(G)) throw Disconnected("graph is not connected");
  GraphClass out;
  int verdict = degree_verdict(H, out.max_degree);
  if (verdict > 0) {
    out.kind = GraphClass::Kind::Neither;
  } else if (verdict == 0) {
    out.kind = GraphClass::Kind::AffineType;
    out.name = require_name(G, CatalogList::IV);
  } else {
    out.kind = GraphClass::Kind::FiniteType;
    out.name = require_name(G, CatalogList::III);
  }
  return out;
}

std::vector<GraphClass> classify_coxeter_components(const LabeledGraph& G) {
  check_coxeter(G);
  std::vector<char> done(G.size(), 0);
  std::vector<GraphClass> out;
  for (int s = 0; s < G.size(); ++s) {
    if (done[s]) continue;
    auto comp = reach(G, s, -1);
    std::vector<int> index(G.size(), -1);
    LabeledGraph C;
    for (int x : comp) {
      done[x] = 1;
      index[x] = C.add_vertex(G.name(x));
    }
    for (const auto& E : G.edges())
      if (index[E.a] >= 0) C.add_edge(index[E.a], index[E.b], E.f);
    out.push_back(classify_coxeter(C));
  }
  return out;
}

// ---- catalog

namespace {

FWeight w(std::uint64_t k) { return FWeight::of(ExtNat(k)); }

// Path x0 - ... - x(n-1); labels[i] on edge (xi, xi+1), `plain` elsewhere.
LabeledGraph path(int n, std::uint64_t plain, std::map<int, FWeight> labels = {}) {
  LabeledGraph G(n);
  for (int i = 0; i + 1 < n; ++i) {
    auto it = labels.find(i);
    G.add_edge(i, i + 1, it == labels.end() ? w(plain) : it->second);
  }
  return G;
}

// Leaves x0, x1 on x2, then the path x2 - ... - x(n-1) with the last edge `last`.
LabeledGraph fork(int n, std::uint64_t plain, const FWeight& last) {
  LabeledGraph G(n);
  G.add_edge(0, 2, w(plain));
  G.add_edge(1, 2, w(plain));
  for (int i = 2; i + 1 < n; ++i) G.add_edge(i, i + 1, i + 2 == n ? last : w(plain));
  return G;
}

// l+1 points: forks at both ends of a path; l = 4 is the star with four leaves.
LabeledGraph double_fork(int l, std::uint64_t plain) {
  LabeledGraph G(l + 1);
  if (l == 4) {
    for (int i = 1; i <= 4; ++i) G.add_edge(0, i, w(plain));
    return G;
  }
  // leaves 0, 1 on 2; path 2 .. l-2; leaves l-1, l on l-2
  G.add_edge(0, 2, w(plain));
  G.add_edge(1, 2, w(plain));
  for (int i = 2; i < l - 2; ++i) G.add_edge(i, i + 1, w(plain));
  G.add_edge(l - 2, l - 1, w(plain));
  G.add_edge(l - 2, l, w(plain));
  return G;
}

// Center x0 with arms of the given lengths.
LabeledGraph star_arms(std::vector<int> arms, std::uint64_t plain) {
  LabeledGraph G(1);
  for (int len : arms) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      int x = G.add_vertex();
      G.add_edge(prev, x, w(plain));
      prev = x;
    }
  }
  return G;
}

// n points on a cycle; n = 1 is a loop and n = 2 a pair of parallel edges.
LabeledGraph cycle(int n, std::uint64_t plain) {
  LabeledGraph G(n);
  for (int i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n, w(plain));
  return G;
}

std::string num(const std::string& base, int l) { return base + std::to_string(l); }

void add(std::vector<CatalogEntry>& out, std::string name, LabeledGraph G) {
  out.push_back({std::move(name), std::move(G)});
}

std::vector<CatalogEntry> dynkin_fgraphs(int L) {
  std::vector<CatalogEntry> out;
  for (int l = 1; l <= L; ++l) add(out, num("A", l), path(l, 1));
  for (int l = 2; l <= L; ++l) add(out, num("B", l), path(l, 1, {{l - 2, w(2)}}));
  for (int l = 3; l <= L; ++l) add(out, num("C", l), path(l, 1, {{l - 2, w(2)}}));
  for (int l = 4; l <= L; ++l) add(out, num("D", l), fork(l, 1, w(1)));
  add(out, "E6", star_arms({1, 2, 2}, 1));
  add(out, "E7", star_arms({1, 2, 3}, 1));
  add(out, "E8", star_arms({1, 2, 4}, 1));
  add(out, "F4", path(4, 1, {{1, w(2)}}));
  add(out, "G2", path(2, 1, {{0, w(3)}}));
  return out;
}

std::vector<CatalogEntry> extended_fgraphs(int L) {
  std::vector<CatalogEntry> out;
  for (int m = 0; m <= L; ++m) add(out, num("~A", m), cycle(m + 1, 1));
  for (int l = 3; l <= L; ++l) add(out, num("~B", l), fork(l + 1, 1, w(2)));
  for (int l = 2; l <= L; ++l) add(out, num("~C", l), path(l + 1, 1, {{0, w(2)}, {l - 1, w(2)}}));
  for (int l = 4; l <= L; ++l) add(out, num("~D", l), double_fork(l, 1));
  add(out, "~E6", star_arms({2, 2, 2}, 1));
  add(out, "~E7", star_arms({1, 3, 3}, 1));
  add(out, "~E8", star_arms({1, 2, 5}, 1));
  add(out, "~F4", path(5, 1, {{2, w(2)}}));
  add(out, "~G2", path(3, 1, {{1, w(3)}}));
  // twisted entries, as f-graphs
  add(out, "BA2", path(2, 1, {{0, w(4)}}));
  for (int k = 3; k <= L + 1; ++k) add(out, num("BA", k), path(k, 1, {{0, w(2)}, {k - 2, w(2)}}));
  for (int l = 2; l <= L; ++l) add(out, num("BD", l), path(l + 1, 1, {{0, w(2)}, {l - 1, w(2)}}));
  for (int l = 3; l <= L; ++l) add(out, num("CA", l), fork(l + 1, 1, w(2)));
  add(out, "GD4", path(3, 1, {{1, w(3)}}));
  add(out, "FE6", path(5, 1, {{2, w(2)}}));
  return out;
}

std::vector<CatalogEntry> finite_coxeter(int L) {
  std::vector<CatalogEntry> out;
  for (int l = 1; l <= L; ++l) add(out, num("A", l), path(l, 3));
  for (int l = 2; l <= L; ++l) add(out, num("B", l), path(l, 3, {{l - 2, w(4)}}));
  for (int l = 4; l <= L; ++l) add(out, num("D", l), fork(l, 3, w(3)));
  add(out, "E6", star_arms({1, 2, 2}, 3));
  add(out, "E7", star_arms({1, 2, 3}, 3));
  add(out, "E8", star_arms({1, 2, 4}, 3));
  add(out, "F4", path(4, 3, {{1, w(4)}}));
  add(out, "G2", path(2, 3, {{0, w(6)}}));
  add(out, "H3", path(3, 3, {{1, w(5)}}));
  add(out, "H4", path(4, 3, {{2, w(5)}}));
  add(out, "I2(5)", path(2, 3, {{0, w(5)}}));
  for (int p = 7; p <= L; ++p) add(out, "I2(" + std::to_string(p) + ")", path(2, 3, {{0, w(p)}}));
  return out;
}

std::vector<CatalogEntry> affine_coxeter(int L) {
  std::vector<CatalogEntry> out;
  if (L >= 1) add(out, "~A1", path(2, 3, {{0, FWeight::inf()}}));
  for (int l = 2; l <= L; ++l) add(out, num("~A", l), cycle(l + 1, 3));
  if (L >= 2) add(out, "~B2", path(3, 3, {{0, w(4)}, {1, w(4)}}));
  for (int l = 3; l <= L; ++l) add(out, num("~B", l), fork(l + 1, 3, w(4)));
  for (int l = 3; l <= L; ++l) add(out, num("~C", l), path(l + 1, 3, {{0, w(4)}, {l - 1, w(4)}}));
  for (int l = 4; l <= L; ++l) add(out, num("~D", l), double_fork(l, 3));
  add(out, "~E6", star_arms({2, 2, 2}, 3));
  add(out, "~E7", star_arms({1, 3, 3}, 3));
  add(out, "~E8", star_arms({1, 2, 5}, 3));
  add(out, "~F4", path(5, 3, {{2, w(4)}}));
  add(out, "~G2", path(3, 3, {{1, w(6)}}));
  return out;
}

// ---- isomorphism

struct IsoView {
  int n = 0;
  std::map<std::pair<int, int>, std::vector<std::string>> adj;
  std::vector<std::vector<int>> nbrs;
  std::vector<std::string> inv;

  explicit IsoView(const LabeledGraph& G) : n(G.size()), nbrs(G.size()), inv(G.size()) {
    std::vector<std::vector<std::string>> local(n);
    for (const auto& E : G.edges()) {
      auto key = std::minmax(E.a, E.b);
      adj[{key.first, key.second}].push_back(to_string(E.f));
      if (E.loop()) {
        local[E.a].push_back("L" + to_string(E.f));
      } else {
        local[E.a].push_back(to_string(E.f));
        local[E.b].push_back(to_string(E.f));
        nbrs[E.a].push_back(E.b);
        nbrs[E.b].push_back(E.a);
      }
    }
    for (auto& [k, v] : adj) std::sort(v.begin(), v.end());
    for (int x = 0; x < n; ++x) {
      std::sort(local[x].begin(), local[x].end());
      std::ostringstream os;
      os << to_string(G.v(x)) << '|';
      for (const auto& s : local[x]) os << s << ',';
      inv[x] = os.str();
    }
    // two refinement rounds over neighbour invariants
    for (int round = 0; round < 2; ++round) {
      std::vector<std::string> next(n);
      for (int x = 0; x < n; ++x) {
        std::vector<std::string> ns;
        for (int y : nbrs[x]) ns.push_back(inv[y]);
        std::sort(ns.begin(), ns.end());
        std::string s = inv[x] + "{";
        for (const auto& t : ns) s += t + ";";
        next[x] = s + "}";
      }
      inv = std::move(next);
    }
  }

  const std::vector<std::string>* labels(int a, int b) const {
    auto key = std::minmax(a, b);
    auto it = adj.find({key.first, key.second});
    return it == adj.end() ? nullptr : &it->second;
  }
};

bool same_labels(const std::vector<std::string>* a, const std::vector<std::string>* b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

bool extend(const IsoView& G, const IsoView& H, const std::vector<int>& order, std::size_t k,
            std::vector<int>& map, std::vector<char>& used) {
  if (k == order.size()) return true;
  int u = order[k];
  for (int c = 0; c < H.n; ++c) {
    if (used[c] || G.inv[u] != H.inv[c]) continue;
    bool ok = same_labels(G.labels(u, u), H.labels(c, c));
    for (std::size_t j = 0; ok && j < k; ++j)
      ok = same_labels(G.labels(u, order[j]), H.labels(c, map[order[j]]));
    if (!ok) continue;
    map[u] = c;
    used[c] = 1;
    if (extend(G, H, order, k + 1, map, used)) return true;
    used[c] = 0;
  }
  map[u] = -1;
  return false;
}

bool isomorphic_uncapped(const LabeledGraph& A, const LabeledGraph& B) {
  if (A.size() != B.size() || A.edges().size() != B.edges().size()) return false;
  IsoView G(A), H(B);
  auto ga = G.inv, hb = H.inv;
  std::sort(ga.begin(), ga.end());
  std::sort(hb.begin(), hb.end());
  if (ga != hb) return false;
  // breadth-first order so each new vertex is constrained by mapped neighbours
  std::vector<int> order;
  std::vector<char> seen(G.n, 0);
  for (int s = 0; s < G.n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      order.push_back(x);
      for (int y : G.nbrs[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  std::vector<int> map(G.n, -1);
  std::vector<char> used(H.n, 0);
  return extend(G, H, order, 0, map, used);
}

}  // namespace

std::vector<CatalogEntry> catalog(CatalogList list, int max_l) {
  switch (list) {
    case CatalogList::I: return dynkin_fgraphs(max_l);
    case CatalogList::II: return extended_fgraphs(max_l);
    case CatalogList::III: return finite_coxeter(max_l);
    case CatalogList::IV: return affine_coxeter(max_l);
  }
  return {};
}

bool isomorphic(const LabeledGraph& G, const LabeledGraph& H, int cap) {
  if (G.size() > cap || H.size() > cap)
    throw CapExceeded("isomorphism test above " + std::to_string(cap) + " vertices");
  return isomorphic_uncapped(G, H);
}

// Catalog members on exactly n vertices, built once per (list, n).
static const std::vector<CatalogEntry>& members_of_size(CatalogList list, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(list), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> keep;
  for (auto& e : catalog(list, n + 1))
    if (e.graph.size() == n) keep.push_back(std::move(e));
  return cache.emplace(key, std::move(keep)).first->second;
}

std::optional<std::string> catalog_name(const LabeledGraph& G, CatalogList list) {
  // I2(p) has an unbounded label; match it directly.
  if (list == CatalogList::III && G.size() == 2 && G.edges().size() == 1 && !G.edge(0).loop()) {
    auto m = G.edge(0).f.as_extnat();
    if (m && !m->is_inf() && m->value() >= 7 && G.all_v_one())
      return "I2(" + std::to_string(m->value()) + ")";
  }
  // Naming is not capped: catalog shapes are paths, cycles and trees, where
  // breadth-first backtracking is linear in practice.
  for (const auto& e : members_of_size(list, G.size()))
    if (isomorphic_uncapped(G, e.graph)) return e.name;
  return std::nullopt;
}

LabeledGraph coxeter_matrix_to_graph(const std::vector<std::vector<ExtNat>>& m) {
  std::size_t t = m.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (m[i].size() != t) throw BadMatrix("Coxeter matrix is not square");
    if (m[i][i] != ExtNat(1)) throw BadMatrix("Coxeter matrix diagonal must be 1");
  }
  LabeledGraph G;
  for (std::size_t i = 0; i < t; ++i) G.add_vertex("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      if (m[i][j] != m[j][i]) throw BadMatrix("Coxeter matrix is not symmetric");
      if (m[i][j] < ExtNat(2)) throw BadMatrix("off-diagonal Coxeter entry below 2");
      if (m[i][j] >= ExtNat(3))
        G.add_edge(static_cast<int>(i), static_cast<int>(j), FWeight::of(m[i][j]));
    }
  return G;
}

bool coxeter_group_finite(const std::vector<std::vector<ExtNat>>& m) {
  if (m.empty()) return true;
  for (const auto& c : classify_coxeter_components(coxeter_matrix_to_graph(m)))
    if (c.kind != GraphClass::Kind::FiniteType) return false;
  return true;
}

}  // namespace reptype
