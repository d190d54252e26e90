#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reptype/poset.hpp"

namespace reptype {

// Poset with an independent equivalence on its points.
class EquivPoset {
 public:
  EquivPoset() = default;
  // classes: lists of equivalent points; unlisted points are singletons
  EquivPoset(Poset base, const std::vector<std::vector<int>>& classes);
  static EquivPoset from_class_ids(Poset base, std::vector<int> class_id);

  const Poset& base() const { return base_; }
  int size() const { return base_.size(); }
  int class_of(int s) const { return cls_[s]; }
  const std::vector<int>& class_ids() const { return cls_; }
  std::vector<int> members(int s) const;
  int dim(int s) const { return static_cast<int>(members(s).size()); }
  int dim() const;
  bool small(int s) const { return dim(s) == 1; }
  int partner(int s) const;  // s* for dim 2; throws otherwise
  Mask incomparables(int s) const { return base_.incomparable_mask(s); }
  Mask small_points() const;
  std::vector<std::vector<int>> classes() const;

 private:
  Poset base_;
  std::vector<int> cls_;
};

struct ClassTooSmall : InputError {
  using InputError::InputError;
};
struct NotReducible : InputError {
  using InputError::InputError;
};

// Chains of the underlying poset that count as 1-chains. An empty predicate
// means ordinary chains.
using ChainPred = std::function<bool(Mask)>;
ChainPred ordinary_chains(const Poset& S);

// Least i with t i-normal; nullopt for non-normal big points and small points.
std::vector<std::optional<int>> normality_degrees(const EquivPoset& S,
                                                  const ChainPred& one_chain = {});
struct Normality {
  bool small = false;
  std::optional<int> degree;
};
Normality normality_degree(const EquivPoset& S, int t, const ChainPred& one_chain = {});
bool is_conormal(const EquivPoset& S, int y, const ChainPred& one_chain = {});

// 1 on small points, 2 + weight of S><(x*) on conormal x, inf otherwise.
std::vector<ExtNat> p_tilde(const EquivPoset& S, const ChainPred& one_chain = {});

// p(Z): sum of weights when Z is a 1-chain, otherwise infinity.
ExtNat weight_of(const std::vector<ExtNat>& p, Mask Z, const ChainPred& is_one_chain);

// rho(S, p): max of the primitive and quasiprimitive values over subsets.
ExtRat rho_weighted(const Poset& S, const std::vector<ExtNat>& p, const ChainPred& is_one_chain,
                    int cap = kDefaultPosetCap);

ExtRat rho_eqposet(const EquivPoset& S, int cap = kDefaultPosetCap);
Rat mu_class(const EquivPoset& S, const std::vector<int>& W);
// mu over classes of size > 2 with caller-supplied weights and 1-chains
Rat mu_weighted(const EquivPoset& S, const std::vector<ExtNat>& p, const ChainPred& one_chain);
Rat mu_eqposet(const EquivPoset& S);  // 0 when every class has size <= 2
RepType classify_eqposet(const EquivPoset& S, int cap = kDefaultPosetCap);

EquivPoset reduce_normal1(const EquivPoset& S, int x);
EquivPoset reduce_dim3(const EquivPoset& S, int y);
Poset grid_poset(int a, int b);  // cardinal product of an a-chain and a b-chain
Poset grid_union_poset(int u, int a, int b);

bool is_perfectly_chain(const EquivPoset& S);
bool is_quasiantichain(const EquivPoset& S);

// Six-point example with equivalent pairs x ~ x*, y ~ y* and small a, b.
struct NamedExample {
  EquivPoset set;
  int x, xs, y, ys, a, b;
};
NamedExample worked_example_eqposet();

}  // namespace reptype
