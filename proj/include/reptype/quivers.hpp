#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reptype/dyadic.hpp"
#include "reptype/graphs.hpp"

namespace reptype {

struct NotSemilinear : InputError {
  using InputError::InputError;
};
struct ShapeViolation : InputError {
  using InputError::InputError;
};
struct Unsupported : InputError {
  using InputError::InputError;
};

struct Arrow {
  int tail = 0, head = 0;
};

// Connected quiver with at least one arrow.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);  // validates

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int find(const std::string& name) const;  // -1 when absent

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// dim <= 2, each point comparable with at most one other, and such points small
bool is_semilinear_eqposet(const EquivPoset& S);
// a chain of small points
bool is_linear_eqposet(const EquivPoset& S);

// The marking K(x) of a vertex. Linear(n) is K^n; Semilinear carries a
// semilinear poset with equivalence; EqPoset and Dyadic are the markings
// with v(x) "beyond infinity".
struct Marking {
  enum class Kind { Linear, Semilinear, EqPoset, Dyadic };
  Kind kind = Kind::Linear;
  int n = 1;
  EquivPoset eqposet;
  std::optional<DyadicSet> dyadic;

  static Marking linear(int n);  // n >= 1
  static Marking semilinear(EquivPoset S);  // throws NotSemilinear
  static Marking eq_poset(EquivPoset S);
  static Marking dyadic_set(DyadicSet D);

  bool is_semilinear() const { return kind == Kind::Linear || kind == Kind::Semilinear; }
  // n for linear markings, inf for properly semilinear ones; throws NotSemilinear otherwise
  ExtNat v() const;
};

struct MarkedQuiver {
  Quiver quiver;
  std::vector<Marking> marks;  // one per vertex
};

// Underlying graph of Q with v(x) = dim K(x) for linear marks and inf otherwise.
LabeledGraph gamma_vgraph(const MarkedQuiver& Q);
RepType classify_semilinear(const MarkedQuiver& Q);

struct Lemma13Shape {
  std::vector<int> path;  // a_1 = x, ..., a_l
  int t = 0;              // l + v(a_l) - 3
  bool x_is_head = false;  // otherwise the marking enters dualized
};
// Throws ShapeViolation unless Gamma(Q) is a path A_l (l >= 2) starting at x,
// inner vertices have v = 1 and the far end has finite v.
Lemma13Shape lemma13_shape(const MarkedQuiver& Q, int x);

// Order reversal with the equivalences transported.
EquivPoset dual_eqposet(const EquivPoset& S);
DyadicSet dual_dyadic(const DyadicSet& D);

// Closed criteria for K(S~) + K^t. t = 0 falls back to the plain classifier.
RepType eqposet_marked_type(const EquivPoset& S, int t, int cap = kDefaultPosetCap);
// Closed criterion for K(D) + K^t with D not a lifted equivalence poset.
bool dyadic_marked_finite(const DyadicSet& D, int t, const DyadicOptions& opt = {});

RepType classify_eqposet_marked(const MarkedQuiver& Q, int x);
bool classify_dyadic_marked(const MarkedQuiver& Q, int x);

struct QuiverVerdict {
  bool finite = false;
  std::optional<RepType> type;  // unset when only finiteness is decided
  std::string route;            // "semilinear", "eqposet", "dyadic" or "shape"
  std::string note;
};
std::string to_string(const QuiverVerdict& v);
QuiverVerdict classify(const MarkedQuiver& Q);

}  // namespace reptype
