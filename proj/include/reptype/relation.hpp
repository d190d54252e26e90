#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reptype/arith.hpp"
#include "reptype/errors.hpp"

namespace reptype {

class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

  static Relation complete(int n);
  static Relation identity(int n);  // the equality relation
  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static Relation from_rows(const std::vector<std::string>& rows);

  int size() const { return n_; }
  bool operator()(int i, int j) const { return m_[idx(i, j)] != 0; }
  void set(int i, int j, bool v = true) { m_[idx(i, j)] = v; }
  // R(i,j) + R(j,i)
  int r(int i, int j) const { return (*this)(i, j) + (*this)(j, i); }
  bool reflexive() const;
  bool is_complete() const;

  Relation restrict_to(const std::vector<int>& keep) const;
  Relation without(int s) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<char> m_;
};

Relation disjoint_union(const Relation& a, const Relation& b);

using SimplexVector = std::vector<Rat>;

struct NormCertificate {
  Rat value;
  SimplexVector witness;
  std::vector<int> support;
};

struct StationaryPoint {
  std::vector<int> support;
  SimplexVector x;
  Rat lambda;
};

inline constexpr int kDefaultNormCap = 20;

Rat quadratic_value(const Relation& R, const SimplexVector& x);
std::vector<StationaryPoint> stationary_candidates(const Relation& R, int cap = kDefaultNormCap);
NormCertificate norm(const Relation& R, int cap = kDefaultNormCap);

// Rational or +infinity.
struct ExtRat {
  bool inf = false;
  Rat value{0};
  static ExtRat infinity() { return {true, Rat(0)}; }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.inf == b.inf && (a.inf || a.value == b.value);
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.value < b.value;
  }
};
std::string to_string(const ExtRat& e);

struct PValue {
  ExtRat p;
  bool non_reflexive_warning = false;
};
PValue p_value(const Relation& R, int cap = kDefaultNormCap);

std::vector<std::pair<int, int>> twins(const Relation& R);

struct Faithfulness {
  bool faithful = false;
  std::optional<int> witness;  // an s with P(S - s) = P(S)
};
Faithfulness is_p_faithful(const Relation& R, int cap = kDefaultNormCap);

}  // namespace reptype
