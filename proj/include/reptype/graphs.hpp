#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reptype/arith.hpp"
#include "reptype/errors.hpp"

namespace reptype {

struct Disconnected : InputError {
  using InputError::InputError;
};
struct NotCoxeter : InputError {
  using InputError::InputError;
};
struct BadMatrix : InputError {
  using InputError::InputError;
};

// Edge weight: a rational >= 1, infinity, or a hat value 4cos^2(pi/m).
struct FWeight {
  enum class Kind { Rational, Inf, Hat };
  Kind kind = Kind::Rational;
  Rat value{1};
  HatValue hat = HatValue::exact(QuadRat(Rat(1)));

  static FWeight rational(Rat r);  // throws InputError below 1
  static FWeight inf();
  static FWeight of_hat(HatValue h);
  static FWeight of(const ExtNat& n);  // integral weight

  bool is_inf() const { return kind == Kind::Inf; }
  bool is_one() const;
  bool is_integral() const;  // integer rational or inf
  std::optional<ExtNat> as_extnat() const;  // set when integral
};
std::string to_string(const FWeight& w);

// Nonnegative real or infinity, as produced by degree sums.
struct WeightSum {
  bool inf = false;
  RealSum value;

  static WeightSum infinity() { return {true, RealSum{}}; }
  WeightSum& operator+=(const WeightSum& o);
};
std::strong_ordering compare(const WeightSum& a, const Rat& b);
std::string to_string(const WeightSum& w);
double to_double(const WeightSum& w);

struct GraphEdge {
  int a = 0, b = 0;  // a == b for a loop
  FWeight f;
  bool loop() const { return a == b; }
  int other(int x) const { return x == a ? b : a; }
};

// Finite graph with loops and parallel edges, vertex weights v (default 1)
// and edge weights f (default 1).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);

  int add_vertex(std::string name = {}, ExtNat v = ExtNat(1));
  int add_edge(int a, int b, FWeight f = {});

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int e) const { return edges_.at(e); }
  const std::vector<int>& incident(int x) const { return inc_.at(x); }
  const ExtNat& v(int x) const { return v_.at(x); }
  void set_v(int x, ExtNat v);
  const std::string& name(int x) const { return names_.at(x); }
  int find(const std::string& name) const;  // -1 when absent
  bool all_v_one() const;

 private:
  std::vector<ExtNat> v_;
  std::vector<std::string> names_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> inc_;
};

bool is_connected(const LabeledGraph& G);

// |phi^-1(x)|, a loop counted once
int degree(const LabeledGraph& G, int x);
WeightSum f_degree(const LabeledGraph& G, int x);

// Deleting the edge keeps the graph connected. Loops are cyclic.
bool is_cyclic_edge(const LabeledGraph& G, int e);
// Vertices of the component of G minus e containing y; e must not be cyclic.
std::vector<int> tail_component(const LabeledGraph& G, int y, int e);

bool is_simple_pair(const LabeledGraph& G, int x, int e);
bool is_vf_simple(const LabeledGraph& G, int x, int e);
// rho(sum of v over the tail) when (v,f)-simple, 4 for a loop, 2 otherwise
Rat partial_degree(const LabeledGraph& G, int x, int e);
// rho(v(x) - 1) + sum over incident edges of f * partial_degree
WeightSum rho_degree(const LabeledGraph& G, int x);

// Replaces v(x) = m > 1 by a pendant path of m - 1 new points and v(x) = inf
// by two pendant points. Original vertices keep their indices.
LabeledGraph expand_vgraph(const LabeledGraph& G);

// Coxeter labels m >= 3 (or inf) become 4cos^2(pi/m).
LabeledGraph hat_transform(const LabeledGraph& G);

struct GraphClass {
  enum class Kind { Dynkin, ExtendedDynkin, Wild, FiniteType, AffineType, Neither };
  Kind kind = Kind::Wild;
  std::string name;  // empty for Wild and Neither
  WeightSum max_degree;
};
std::string to_string(GraphClass::Kind k);

GraphClass classify_integral_fgraph(const LabeledGraph& G);
GraphClass classify_coxeter(const LabeledGraph& G);
// One verdict per connected component, components in order of first vertex.
std::vector<GraphClass> classify_coxeter_components(const LabeledGraph& G);

enum class CatalogList { I, II, III, IV };
struct CatalogEntry {
  std::string name;
  LabeledGraph graph;
};
// Family members with parameter l <= max_l (and I2(p) with p <= max_l) plus
// the exceptional members, in naming order.
std::vector<CatalogEntry> catalog(CatalogList list, int max_l);
std::optional<std::string> catalog_name(const LabeledGraph& G, CatalogList list);

inline constexpr int kIsoCap = 16;
// Label-preserving isomorphism of multigraphs (v and f must match).
bool isomorphic(const LabeledGraph& G, const LabeledGraph& H, int cap = kIsoCap);

// m symmetric, diagonal 1, off-diagonal in {2, 3, ..., inf}. Edges where m >= 3.
LabeledGraph coxeter_matrix_to_graph(const std::vector<std::vector<ExtNat>>& m);
// The Coxeter group is finite iff every component is of finite type.
bool coxeter_group_finite(const std::vector<std::vector<ExtNat>>& m);

}  // namespace reptype
