#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reptype/eqposet.hpp"

namespace reptype {

using PointPair = std::pair<int, int>;

struct AxiomViolation : InputError {
  AxiomViolation(std::string axiom_, std::vector<PointPair> pairs_);
  std::string axiom;  // "i", "ii", "iii" or "iv"
  std::vector<PointPair> pairs;
};
struct NotComparable : InputError {
  using InputError::InputError;
};
struct NotDyadic : InputError {
  using InputError::InputError;
};

// Poset with an equivalence on its closed pairs {(s,t) : s <= t}.
class BiequivPoset {
 public:
  BiequivPoset() = default;
  // classes: lists of equivalent closed pairs; unlisted pairs are singletons.
  // With validate set, a failed axiom throws AxiomViolation.
  BiequivPoset(Poset base, const std::vector<std::vector<PointPair>>& classes,
               bool validate = true);
  static BiequivPoset trivial(Poset base);
  // (a,b) ~ (c,d) iff a = b, c = d and a ~ c
  static BiequivPoset lift(const EquivPoset& S);

  const Poset& base() const { return base_; }
  int size() const { return base_.size(); }
  int pair_class(int s, int t) const;  // -1 unless s <= t
  std::vector<PointPair> pair_members(int s, int t) const;
  std::vector<std::vector<PointPair>> pair_classes() const;  // classes of size > 1
  EquivPoset tilde() const;  // s ~ t iff (s,s) ~ (t,t)
  int rank(int x, int y) const;  // class size of (x,y); needs x < y
  // Z is a 1-chain: every pair x < y inside has rank 1
  bool one_chain(Mask Z) const;
  ChainPred one_chain_pred() const;
  BiequivPoset induced(const std::vector<int>& keep) const;

 private:
  Poset base_;
  std::vector<int> cls_;      // n*n, -1 off the closed pairs
  std::vector<Mask> tri_up_;  // y > x with rank(x,y) = 1
};

std::optional<AxiomViolation> validate_biequivalence(const BiequivPoset& B);

enum class PairRelation { Triangle, DoubleArrow, Incomparable, Above };
std::string to_string(PairRelation r);
// x == y gives Triangle on small points, DoubleArrow on big ones
PairRelation relation(const BiequivPoset& B, int x, int y);
bool is_transitive_biequiv(const BiequivPoset& B);

std::vector<ExtNat> p_hat(const BiequivPoset& B);
ExtRat rho_hat(const BiequivPoset& B, int cap = kDefaultPosetCap);

struct Prop6Report {
  ExtRat rho;
  Rat mu;
  bool holds = false;  // rho < 4 and mu < 4
};
Prop6Report prop6_report(const BiequivPoset& B, int cap = kDefaultPosetCap);
bool prop6_necessary(const BiequivPoset& B, int cap = kDefaultPosetCap);

// ---- dyadic sets

struct Edge {
  int x = 0, y = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DyadicSet {
 public:
  DyadicSet() = default;
  explicit DyadicSet(BiequivPoset inner);  // throws NotDyadic

  const BiequivPoset& inner() const { return inner_; }
  const Poset& base() const { return inner_.base(); }
  int size() const { return inner_.size(); }
  bool big(int s) const { return star_[s] != s; }
  int star(int s) const { return star_[s]; }  // s itself for small points
  const std::vector<ExtNat>& p() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge dual(const Edge& e) const;
  bool is_edge(int x, int y) const;

 private:
  BiequivPoset inner_;
  std::vector<int> star_;
  std::vector<ExtNat> p_;
  std::vector<Edge> edges_;
};

enum class EdgeOrder { Containment, Literal };

struct EdgeShape {
  Edge edge;
  bool is_short = false;
  bool is_long = false;
  bool is_maximal = false;
};
std::vector<EdgeShape> edge_shortness(const DyadicSet& D,
                                      EdgeOrder order = EdgeOrder::Containment);
std::vector<std::vector<int>> strips(const DyadicSet& D, EdgeOrder order = EdgeOrder::Containment);

struct EdgeContext {
  Edge edge;
  Mask interval = 0;  // x < z < y
  int l = 0;
  Mask eq = 0, eq_minus = 0, eq_plus = 0;
  ExtNat eq_value;  // weight of eq; inf unless a 1-chain
};
EdgeContext equipment(const DyadicSet& D, const Edge& e);
ExtNat eq_between(const DyadicSet& D, int x, int y);
bool linearly_equipped(const DyadicSet& D);

struct BorderingSet {
  Mask z_minus = 0, z_plus = 0, z_e = 0;
};
inline constexpr std::size_t kDefaultBorderingCap = 1 << 20;
std::vector<BorderingSet> bordering_sets(const DyadicSet& D, const Edge& e,
                                         std::size_t cap = kDefaultBorderingCap);

struct MuBreakdown {
  int l = 0;
  ExtNat eq, eq_dual, eq_minus, eq_plus, eq_star, mu;
};
MuBreakdown mu_breakdown(const DyadicSet& D, const Edge& e, const BorderingSet& X);
ExtNat mu_sigma(const DyadicSet& D, const Edge& e, const BorderingSet& X);

// ---- the mu = 4 catalog of condition A

struct MuEq4Tuple {
  int l = 0, eq = 0, eq_dual = 0, eq_minus = 0, eq_plus = 0;
  friend auto operator<=>(const MuEq4Tuple&, const MuEq4Tuple&) = default;
};
struct MuEq4Case {
  int number = 0;
  std::vector<MuEq4Tuple> tuples;  // first the main reading, then the "or" variant
};
// Every tuple with mu(eq, eq_dual + eq_minus + eq_plus, l) = 4 under
// eq_minus >= eq_plus, eq_plus/minus <= |2 - l|, and eq_minus = eq_plus = 0 for l >= 2.
std::vector<MuEq4Tuple> enumerate_muEq4_tuples();
// The numbered catalog 1..17, each entry checked against the systematic scan.
std::vector<MuEq4Case> enumerate_muEq4_cases();
// Systematic tuples not covered by the numbered catalog.
std::vector<MuEq4Tuple> muEq4_unlisted();
std::optional<int> muEq4_case_of(const MuBreakdown& b);

// ---- classification

enum class ConditionAScope { AllEdges, LongEdges };
// Condition C motif over an ordered pair of edges. The default takes (a,b) and
// (c,d) with b <= c lying in different pairs of dual strips.
using MotifPred = std::function<bool(const DyadicSet&, const Edge&, const Edge&)>;
bool default_motif(const DyadicSet& D, const Edge& ab, const Edge& cd);

struct DyadicOptions {
  EdgeOrder order = EdgeOrder::Containment;
  ConditionAScope scope = ConditionAScope::AllEdges;
  MotifPred motif;  // empty: default_motif
  int cap = kDefaultPosetCap;
};

struct DyadicVerdict {
  bool finite = false;
  std::string reason;  // empty when finite
  std::optional<int> mu_case;
};
DyadicVerdict classify_dyadic(const DyadicSet& D, const DyadicOptions& opt = {});

// Partition S = U + V with every pair class and every incomparability inside
// U or inside V; the representation categories then split.
std::optional<std::pair<std::vector<int>, std::vector<int>>> split_components(
    const BiequivPoset& B);

inline constexpr int kCriticalCap = 8;
bool is_critical_dyadic(const DyadicSet& D, const DyadicOptions& opt = {},
                        int cap = kCriticalCap);

// Structure facts checked on a single set. Each is vacuous when rho(D~) >= 4
// where it only speaks about rho(D~) < 4.
// big a, b not dual: a, b comparable or a*, b* comparable
bool dual_comparability_holds(const DyadicSet& D);
// Finite => linearly equipped; linearly equipped and rho(D~) < 4 => rho(D) < 4
bool equipment_implications_hold(const DyadicSet& D, const DyadicOptions& opt = {});
// no point heads or tails two short edges, and strips partition the big points
bool short_edges_form_strips(const DyadicSet& D, EdgeOrder order = EdgeOrder::Containment);

// Visits every valid dyadic set on a poset of exactly n points (posets up to
// isomorphism, labelings of the classes not deduplicated).
void for_each_dyadic_set(int n, const std::function<void(const DyadicSet&)>& visit, int cap = 7);

}  // namespace reptype
