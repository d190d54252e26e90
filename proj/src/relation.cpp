#include "reptype/relation.hpp"

#include <algorithm>

#include "reptype/linalg.hpp"

namespace reptype {

Relation Relation::complete(int n) {
  Relation R(n);
  std::fill(R.m_.begin(), R.m_.end(), 1);
  return R;
}

Relation Relation::identity(int n) {
  Relation R(n);
  for (int i = 0; i < n; ++i) R.set(i, i);
  return R;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw InputError("negative relation size");
  Relation R(n);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("pair index out of range");
    R.set(i, j);
  }
  return R;
}

Relation Relation::from_rows(const std::vector<std::string>& rows) {
  int n = static_cast<int>(rows.size());
  Relation R(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix is not square");
    for (int j = 0; j < n; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1') throw InputError("matrix entries must be 0 or 1");
      R.set(i, j, c == '1');
    }
  }
  return R;
}

bool Relation::reflexive() const {
  for (int i = 0; i < n_; ++i)
    if (!(*this)(i, i)) return false;
  return true;
}

bool Relation::is_complete() const {
  return std::all_of(m_.begin(), m_.end(), [](char c) { return c != 0; });
}

Relation Relation::restrict_to(const std::vector<int>& keep) const {
  Relation R(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) R.set(a, b, (*this)(keep[a], keep[b]));
  return R;
}

Relation Relation::without(int s) const {
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i)
    if (i != s) keep.push_back(i);
  return restrict_to(keep);
}

Relation disjoint_union(const Relation& a, const Relation& b) {
  int n = a.size() + b.size();
  Relation R(n);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) R.set(i, j, a(i, j));
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) R.set(a.size() + i, a.size() + j, b(i, j));
  return R;
}

Rat quadratic_value(const Relation& R, const SimplexVector& x) {
  if (static_cast<int>(x.size()) != R.size()) throw InputError("dimension mismatch");
  Rat f = 0;
  for (int i = 0; i < R.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < R.size(); ++j)
      if (R(i, j)) f += x[i] * x[j];
  }
  return f;
}

std::vector<StationaryPoint> stationary_candidates(const Relation& R, int cap) {
  const int n = R.size();
  if (n > cap) throw CapExceeded("norm: n = " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
  std::vector<StationaryPoint> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> T;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) T.push_back(i);
    const std::size_t k = T.size();
    // unknowns x_T then lambda
    std::vector<std::vector<Rat>> A(k + 1, std::vector<Rat>(k + 1, Rat(0)));
    std::vector<Rat> rhs(k + 1, Rat(0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) A[a][b] = R.r(T[a], T[b]);
      A[a][k] = -2;
      A[k][a] = 1;
    }
    rhs[k] = 1;
    if (!solve_linear(A, rhs)) continue;
    bool nonneg = std::all_of(rhs.begin(), rhs.begin() + k, [](const Rat& v) { return v >= 0; });
    if (!nonneg) continue;
    StationaryPoint sp;
    sp.support = T;
    sp.x.assign(n, Rat(0));
    for (std::size_t a = 0; a < k; ++a) sp.x[T[a]] = rhs[a];
    sp.lambda = rhs[k];
    out.push_back(std::move(sp));
  }
  // Vertices are never singular faces, but keep them explicitly.
  for (int i = 0; i < n; ++i) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const StationaryPoint& s) {
      return s.support.size() == 1 && s.support[0] == i;
    });
    if (seen) continue;
    StationaryPoint sp;
    sp.support = {i};
    sp.x.assign(n, Rat(0));
    sp.x[i] = 1;
    sp.lambda = R(i, i) ? 1 : 0;
    out.push_back(std::move(sp));
  }
  return out;
}

NormCertificate norm(const Relation& R, int cap) {
  if (R.size() < 1) throw InputError("norm of an empty relation");
  auto cands = stationary_candidates(R, cap);
  const StationaryPoint* best = nullptr;
  Rat best_val;
  for (const auto& c : cands) {
    Rat v = quadratic_value(R, c.x);
    if (!best || v < best_val ||
        (v == best_val &&
         std::lexicographical_compare(c.x.begin(), c.x.end(), best->x.begin(), best->x.end()))) {
      best = &c;
      best_val = v;
    }
  }
  return {best_val, best->x, best->support};
}

std::string to_string(const ExtRat& e) { return e.inf ? "inf" : to_string(e.value); }

PValue p_value(const Relation& R, int cap) {
  if (R.size() == 0) return {{false, Rat(0)}, false};
  if (!R.reflexive()) return {ExtRat::infinity(), true};
  Rat v = norm(R, cap).value;
  return {{false, 1 / v}, false};
}

std::vector<std::pair<int, int>> twins(const Relation& R) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < R.size(); ++a)
    for (int b = a + 1; b < R.size(); ++b) {
      bool ok = true;
      for (int s = 0; s < R.size() && ok; ++s)
        if (s != a && s != b && R.r(a, s) != R.r(b, s)) ok = false;
      if (ok) out.emplace_back(a, b);
    }
  return out;
}

Faithfulness is_p_faithful(const Relation& R, int cap) {
  if (!R.reflexive()) throw InputError("P-faithfulness needs a reflexive relation");
  ExtRat whole = p_value(R, cap).p;
  for (int s = 0; s < R.size(); ++s) {
    ExtRat part = p_value(R.without(s), cap).p;
    if (!(part < whole)) return {false, s};
  }
  return {true, std::nullopt};
}

}  // namespace reptype
