#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reptype/arith.hpp"
#include "reptype/errors.hpp"
#include "reptype/relation.hpp"

namespace reptype {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }

struct CycleDetected : InputError {
  using InputError::InputError;
};

// Finite poset on {0..n-1}, n <= 64, stored as strict up/down masks.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n) : n_(n), up_(n, 0), down_(n, 0) {}

  int size() const { return n_; }
  bool lt(int i, int j) const { return up_[i] >> j & 1; }
  bool le(int i, int j) const { return i == j || lt(i, j); }
  bool comparable(int i, int j) const { return i == j || lt(i, j) || lt(j, i); }
  Mask up(int i) const { return up_[i]; }      // strictly above
  Mask down(int i) const { return down_[i]; }  // strictly below
  Mask comparable_mask(int i) const { return up_[i] | down_[i]; }
  Mask incomparable_mask(int i) const;  // excludes i itself
  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  std::vector<std::pair<int, int>> covers() const;
  Poset induced(const std::vector<int>& keep) const;
  Poset induced(Mask keep) const;
  bool is_chain(Mask set) const;
  bool is_antichain(Mask set) const;
  bool is_connected() const;
  // reflexive order relation: R(i,j) iff i <= j
  Relation to_relation() const;

  // Builders. add_lt closes transitively.
  void add_lt(int i, int j);

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> up_, down_;
};

Poset make_poset(int n, const std::vector<std::pair<int, int>>& covers);
Poset chain_poset(int n);
// disjoint union of chains (n_1, ..., n_k)
Poset primitive_poset(const std::vector<int>& chains);
Poset poset_disjoint_union(const Poset& a, const Poset& b);
// a placed entirely below b
Poset ordinal_sum(const Poset& a, const Poset& b);
Poset n_hat();

int width(const Poset& S);
// longest chain inside the given subset
int longest_chain(const Poset& S, Mask within);

enum class RepType { Finite, Tame, Wild };
std::string to_string(RepType t);

inline constexpr int kDefaultPosetCap = 20;

Rat primitive_value(const Poset& S, int cap = kDefaultPosetCap);
int quasiprimitive_value(const Poset& S, int cap = kDefaultPosetCap);
Rat rho_poset(const Poset& S, int cap = kDefaultPosetCap);
RepType classify_poset(const Poset& S, int cap = kDefaultPosetCap);

struct CriticalPoset {
  std::string name;
  Poset poset;
  bool tame_boundary;  // K list; otherwise N list
};
const std::vector<CriticalPoset>& critical_posets();

// Induced order embeddings of pattern into host; images deduplicated.
std::vector<std::vector<int>> embeddings(const Poset& pattern, const Poset& host,
                                         bool first_only = false);

struct CriticalHit {
  std::string name;
  std::vector<int> image;
};
std::vector<CriticalHit> contains_critical(const Poset& S, bool first_per_pattern = false,
                                           int cap = kDefaultPosetCap);

// ---- wattles

struct Wattle {
  std::vector<int> sizes;
  Poset poset;
  std::vector<int> chain_of;  // chain index per point
  std::vector<int> z_minus;   // per chain, bottom point for chains 0..t-2, else -1
  std::vector<int> z_plus;    // per chain, top point for chains 1..t-1, else -1
  std::vector<int> common;
};

struct BadSizes : InputError {
  using InputError::InputError;
};

Wattle make_wattle(const std::vector<int>& sizes);
bool is_uniform_wattle(const std::vector<int>& sizes);
// The counting form u_i = floor(i(1+m)/t) of the long-chain positions; used to
// cross-check the position form in is_uniform_wattle.
bool uniform_by_counting(const std::vector<int>& sizes);

struct WattleVector {
  SimplexVector x;
  Rat alpha, beta, gamma;
};
std::optional<WattleVector> wattle_positive_vector(const std::vector<int>& sizes);

enum class Semilinear { Yes, No, AlreadyLinear };
Semilinear is_semilinear_poset(const Poset& S);
// ordinal sum of blocks, each an antichain or an arbitrary poset from a list
bool is_ordinal_sum_of(const Poset& S, const std::vector<Poset>& blocks);

// ---- enumeration up to isomorphism

std::string canonical_form(const Poset& S);
std::string canonical_form_full(const Poset& S);  // plain min over all n! permutations
bool isomorphic(const Poset& a, const Poset& b);
std::vector<Poset> enumerate_posets(int n, bool connected_only, int cap = 7);

struct Conjecture1Report {
  int max_n = 0;
  std::map<int, int> posets_checked;  // per size
  std::map<int, int> faithful;        // per size
  std::vector<Poset> counterexamples;
};
Conjecture1Report verify_conjecture1(int max_n, int cap = 7);

// true if S is isomorphic to some wattle; sizes returned through out
bool recognize_wattle(const Poset& S, std::vector<int>* sizes = nullptr);

}  // namespace reptype
