#include "reptype/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace reptype {

// ---- numeric norm

NumericResult numeric_norm(const Relation& R, int depth) {
  const int n = R.size();
  if (n < 1) throw InputError("numeric_norm needs at least one point");
  if (n > kNumericMaxN) throw CapExceeded("numeric_norm is limited to n <= 8");
  if (depth < 1) throw InputError("depth must be positive");
  // f(x) = x^T A x with A_ij = R(i,j); gradient g = (A + A^T) x
  std::vector<double> A(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i * n + j] = R(i, j) ? 1.0 : 0.0;
  auto value = [&](const std::vector<double>& x) {
    double f = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f += A[i * n + j] * x[i] * x[j];
    return f;
  };

  NumericResult best;
  best.value = 1e300;
  for (Mask face = 1; face < bit(n); ++face) {
    std::vector<double> x(n, 0.0);
    const double share = 1.0 / popcount(face);
    for (int i = 0; i < n; ++i)
      if (face >> i & 1) x[i] = share;
    std::vector<double> g(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i] += (A[i * n + j] + A[j * n + i]) * x[j];
    double step = 1;
    for (int level = 1; level <= depth; ++level) {
      step /= 2;
      for (int pass = 0; pass < 100000; ++pass) {
        bool moved = false;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j || x[i] <= 0) continue;
            double a = std::min(step, x[i]);
            // f(x + a(e_j - e_i)) - f(x)
            double curv = A[j * n + j] + A[i * n + i] - A[i * n + j] - A[j * n + i];
            double delta = a * (g[j] - g[i]) + a * a * curv;
            ++best.iterations;
            if (delta >= -1e-15) continue;
            x[i] -= a;
            x[j] += a;
            for (int k = 0; k < n; ++k)
              g[k] += a * ((A[k * n + j] + A[j * n + k]) - (A[k * n + i] + A[i * n + k]));
            moved = true;
          }
        if (!moved) break;
      }
    }
    double f = value(x);  // recomputed to drop accumulated update error
    if (f < best.value) best.value = f;
    best.residual = step;
  }
  return best;
}

// ---- poset enumeration

namespace {

using PosetKey = std::vector<std::pair<int, int>>;

PosetKey poset_key(const Poset& P) {
  PosetKey k;
  for (int i = 0; i < P.size(); ++i) k.push_back({popcount(P.down(i)), popcount(P.up(i))});
  std::sort(k.begin(), k.end());
  return k;
}

std::vector<Poset> grow_posets(int n) {
  if (n < 1) return {};
  if (n > kOracleEnumCap) throw CapExceeded("oracle poset enumeration is limited to n <= 7");
  std::vector<Poset> level{Poset(1)};
  for (int m = 1; m < n; ++m) {
    std::map<PosetKey, std::vector<Poset>> buckets;
    std::vector<Poset> next;
    for (const auto& P : level) {
      for (Mask upset = 0; upset < bit(m); ++upset) {
        bool closed = true;
        for (int i = 0; i < m && closed; ++i)
          if ((upset >> i & 1) && (P.up(i) & ~upset)) closed = false;
        if (!closed) continue;
        Poset Q(m + 1);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (P.lt(i, j)) Q.add_lt(i, j);
        for (int i = 0; i < m; ++i)
          if (upset >> i & 1) Q.add_lt(m, i);
        auto& bucket = buckets[poset_key(Q)];
        bool seen = std::any_of(bucket.begin(), bucket.end(),
                                [&](const Poset& B) { return posets_isomorphic(B, Q); });
        if (!seen) {
          bucket.push_back(Q);
          next.push_back(std::move(Q));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size() || poset_key(a) != poset_key(b)) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int u) {
    if (u == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || popcount(a.down(u)) != popcount(b.down(c)) ||
          popcount(a.up(u)) != popcount(b.up(c)))
        continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        ok = a.lt(u, w) == b.lt(c, map[w]) && a.lt(w, u) == b.lt(map[w], c);
      if (!ok) continue;
      map[u] = c;
      used[c] = 1;
      if (rec(u + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return rec(0);
}

std::vector<Poset> enumerate_all_posets(int n) { return grow_posets(n); }

std::vector<Poset> enumerate_connected_posets(int n) {
  auto all = grow_posets(n);
  std::erase_if(all, [](const Poset& P) { return !P.is_connected(); });
  return all;
}

// ---- exclusion classifier

RepType exclusion_classify(const Poset& S) {
  if (S.size() > kExclusionCap) throw CapExceeded("exclusion_classify is limited to 16 points");
  bool has_k = false;
  for (const auto& c : critical_posets()) {
    if (c.poset.size() > S.size() || embeddings(c.poset, S, true).empty()) continue;
    if (!c.tame_boundary) return RepType::Wild;
    has_k = true;
  }
  return has_k ? RepType::Tame : RepType::Finite;
}

// ---- Tits form

RepType tits_form_type(const LabeledGraph& G) {
  const int n = G.size();
  if (!G.all_v_one()) throw InputError("Tits form needs v = 1");
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  for (const auto& E : G.edges()) {
    if (!E.f.is_one()) throw InputError("Tits form needs f = 1");
    if (E.loop()) {
      M[E.a][E.a] -= 1;
    } else {
      M[E.a][E.b] -= Rat(1, 2);
      M[E.b][E.a] -= Rat(1, 2);
    }
  }
  bool definite = true;
  for (int k = 0; k < n; ++k) {
    if (M[k][k] < 0) return RepType::Wild;
    if (M[k][k] == 0) {
      for (int j = k + 1; j < n; ++j)
        if (M[k][j] != 0) return RepType::Wild;
      definite = false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k] == 0) continue;
      Rat factor = M[i][k] / M[k][k];
      for (int j = k; j < n; ++j) M[i][j] -= factor * M[k][j];
    }
  }
  return definite ? RepType::Finite : RepType::Tame;
}

// ---- graph enumeration

namespace {

std::vector<int> degree_key(const LabeledGraph& G) {
  std::vector<int> k;
  for (int x = 0; x < G.size(); ++x) k.push_back(degree(G, x));
  std::sort(k.begin(), k.end());
  k.push_back(static_cast<int>(G.edges().size()));
  return k;
}

std::vector<LabeledGraph> grow_graphs(int n, bool trees) {
  if (n < 1) return {};
  std::vector<LabeledGraph> level{LabeledGraph(1)};
  for (int m = 1; m < n; ++m) {
    std::map<std::vector<int>, std::vector<LabeledGraph>> buckets;
    std::vector<LabeledGraph> next;
    for (const auto& G : level) {
      for (Mask nb = 1; nb < bit(m); ++nb) {
        if (trees && popcount(nb) != 1) continue;
        LabeledGraph H = G;
        int v = H.add_vertex();
        for (int i = 0; i < m; ++i)
          if (nb >> i & 1) H.add_edge(i, v);
        auto& bucket = buckets[degree_key(H)];
        bool seen = std::any_of(bucket.begin(), bucket.end(),
                                [&](const LabeledGraph& B) { return isomorphic(B, H); });
        if (!seen) {
          bucket.push_back(H);
          next.push_back(std::move(H));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<LabeledGraph> enumerate_connected_graphs(int n) {
  if (n > 7) throw CapExceeded("connected graph enumeration is limited to n <= 7");
  return grow_graphs(n, false);
}

std::vector<LabeledGraph> enumerate_trees(int n) {
  if (n > 12) throw CapExceeded("tree enumeration is limited to n <= 12");
  return grow_graphs(n, true);
}

}  // namespace reptype
