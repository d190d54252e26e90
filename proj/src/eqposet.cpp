#include "reptype/eqposet.hpp"

#include <algorithm>
#include <map>

#include "reptype/separating.hpp"

namespace reptype {

EquivPoset::EquivPoset(Poset base, const std::vector<std::vector<int>>& classes)
    : base_(std::move(base)), cls_(base_.size(), -1) {
  int next = 0;
  for (const auto& c : classes) {
    for (int s : c) {
      if (s < 0 || s >= base_.size()) throw InputError("class member out of range");
      if (cls_[s] >= 0) throw InputError("point listed in two classes");
      cls_[s] = next;
    }
    if (!c.empty()) ++next;
  }
  for (int& c : cls_)
    if (c < 0) c = next++;
}

EquivPoset EquivPoset::from_class_ids(Poset base, std::vector<int> class_id) {
  if (static_cast<int>(class_id.size()) != base.size()) throw InputError("class id count mismatch");
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < static_cast<int>(class_id.size()); ++s) groups[class_id[s]].push_back(s);
  std::vector<std::vector<int>> classes;
  for (auto& [id, m] : groups) classes.push_back(m);
  return EquivPoset(std::move(base), classes);
}

std::vector<int> EquivPoset::members(int s) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cls_[i] == cls_[s]) out.push_back(i);
  return out;
}

int EquivPoset::dim() const {
  int d = 0;
  for (int s = 0; s < size(); ++s) d = std::max(d, dim(s));
  return d;
}

int EquivPoset::partner(int s) const {
  auto m = members(s);
  if (m.size() != 2) throw InputError("partner of a point whose dimension is not 2");
  return m[0] == s ? m[1] : m[0];
}

Mask EquivPoset::small_points() const {
  Mask m = 0;
  for (int s = 0; s < size(); ++s)
    if (small(s)) m |= bit(s);
  return m;
}

std::vector<std::vector<int>> EquivPoset::classes() const {
  std::map<int, std::vector<int>> g;
  for (int s = 0; s < size(); ++s) g[cls_[s]].push_back(s);
  std::vector<std::vector<int>> out;
  for (auto& [id, m] : g) out.push_back(m);
  return out;
}

ChainPred ordinary_chains(const Poset& S) {
  return [&S](Mask m) { return S.is_chain(m); };
}

static bool one_chain(const EquivPoset& S, const ChainPred& pred, Mask m) {
  return pred ? pred(m) : S.base().is_chain(m);
}

std::vector<std::optional<int>> normality_degrees(const EquivPoset& S, const ChainPred& pred) {
  const int n = S.size();
  std::vector<std::optional<int>> deg(n);
  Mask small = S.small_points();
  for (int t = 0; t < n; ++t) {
    if (S.small(t)) continue;
    Mask inc = S.incomparables(t);
    if ((inc & ~small) == 0 && S.base().is_chain(inc)) deg[t] = 1;
  }
  for (int i = 2; i <= n; ++i) {
    bool changed = false;
    for (int t = 0; t < n; ++t) {
      if (S.small(t) || deg[t]) continue;
      Mask inc = S.incomparables(t);
      if (!one_chain(S, pred, inc)) continue;
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        if (!(inc >> x & 1) || S.small(x)) continue;
        if (S.dim(x) > 2) ok = false;
        else {
          auto d = deg[S.partner(x)];
          ok = d && *d < i;
        }
      }
      if (ok) {
        deg[t] = i;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return deg;
}

Normality normality_degree(const EquivPoset& S, int t, const ChainPred& pred) {
  if (S.small(t)) return {true, std::nullopt};
  return {false, normality_degrees(S, pred)[t]};
}

bool is_conormal(const EquivPoset& S, int y, const ChainPred& pred) {
  if (S.dim(y) != 2) return false;
  return normality_degrees(S, pred)[S.partner(y)].has_value();
}

std::vector<ExtNat> p_tilde(const EquivPoset& S, const ChainPred& pred) {
  const int n = S.size();
  auto deg = normality_degrees(S, pred);
  std::vector<ExtNat> p(n, ExtNat::inf());
  std::vector<std::pair<int, int>> conormal;  // (degree, point)
  for (int s = 0; s < n; ++s) {
    if (S.small(s)) p[s] = 1;
    else if (S.dim(s) == 2 && deg[S.partner(s)]) conormal.emplace_back(*deg[S.partner(s)], s);
  }
  std::sort(conormal.begin(), conormal.end());
  std::vector<char> done(n, 0);
  for (int s = 0; s < n; ++s)
    if (S.small(s)) done[s] = 1;
  for (auto [d, s] : conormal) {
    ExtNat v = 2;
    Mask Y = S.incomparables(S.partner(s));
    for (int z = 0; z < n; ++z) {
      if (!(Y >> z & 1)) continue;
      if (!done[z]) throw std::logic_error("conormal weight depends on an unresolved point");
      v = v + p[z];
    }
    p[s] = v;
    done[s] = 1;
  }
  return p;
}

ExtNat weight_of(const std::vector<ExtNat>& p, Mask Z, const ChainPred& is_one_chain) {
  if (!is_one_chain(Z)) return ExtNat::inf();
  ExtNat w = 0;
  for (int i = 0; Z >> i; ++i)
    if (Z >> i & 1) w = w + p[i];
  return w;
}

namespace {

ExtRat ext(const ExtNat& n) {
  if (n.is_inf()) return ExtRat::infinity();
  return {false, Rat(static_cast<unsigned long>(n.value()))};
}

ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

}  // namespace

ExtRat rho_weighted(const Poset& S, const std::vector<ExtNat>& p, const ChainPred& pred,
                    int cap) {
  const int n = S.size();
  if (n > cap)
    throw CapExceeded("rho_weighted: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (static_cast<int>(p.size()) != n) throw InputError("weight count mismatch");

  // primitive part: disjoint pairwise incomparable chains
  Rat best = 0;
  std::vector<Mask> comps;
  std::vector<Rat> vals;
  std::function<void(int, Mask, Rat)> dfs = [&](int i, Mask chosen, Rat val) {
    if (val > best) best = val;
    if (i == n || val + 2 * (n - i) <= best) return;
    Mask touch = S.comparable_mask(i) & chosen;
    int hit = -1;
    bool ok = true;
    for (std::size_t c = 0; c < comps.size() && touch; ++c)
      if (comps[c] & touch) {
        if (hit >= 0 || comps[c] != touch) ok = false;
        hit = static_cast<int>(c);
      }
    if (ok) {
      if (hit < 0) {
        Rat v = rho_point(weight_of(p, bit(i), pred));
        comps.push_back(bit(i));
        vals.push_back(v);
        dfs(i + 1, chosen | bit(i), val + v);
        comps.pop_back();
        vals.pop_back();
      } else {
        Mask old = comps[hit];
        Rat old_v = vals[hit];
        comps[hit] |= bit(i);
        vals[hit] = rho_point(weight_of(p, comps[hit], pred));
        dfs(i + 1, chosen | bit(i), val - old_v + vals[hit]);
        comps[hit] = old;
        vals[hit] = old_v;
      }
    }
    dfs(i + 1, chosen, val);
  };
  dfs(0, 0, Rat(0));
  ExtRat result{false, best};

  // quasiprimitive part: N-hat plus a chain Z incomparable to it, valued p(Z)
  std::map<Mask, ExtNat> memo;
  auto best_chain = [&](Mask free) -> ExtNat {
    auto it = memo.find(free);
    if (it != memo.end()) return it->second;
    ExtNat top = 0;
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (free >> i & 1) pts.push_back(i);
    std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask Z) {
      if (top.is_inf()) return;
      top = max(top, weight_of(p, Z, pred));
      for (std::size_t j = k; j < pts.size(); ++j) {
        int s = pts[j];
        if ((S.incomparable_mask(s) & Z) != 0) continue;
        rec(j + 1, Z | bit(s));
      }
    };
    rec(0, 0);
    memo.emplace(free, top);
    return top;
  };
  for (int a1 = 0; a1 < n; ++a1)
    for (int b2 = 0; b2 < n; ++b2) {
      if (!S.lt(a1, b2)) continue;
      for (int a2 = 0; a2 < n; ++a2) {
        if (!S.lt(a1, a2) || S.comparable(a2, b2)) continue;
        for (int b1 = 0; b1 < n; ++b1) {
          if (!S.lt(b1, b2) || S.comparable(b1, a1) || S.comparable(b1, a2)) continue;
          Mask free = S.incomparable_mask(a1) & S.incomparable_mask(a2) &
                      S.incomparable_mask(b1) & S.incomparable_mask(b2);
          result = ext_max(result, ext(best_chain(free)));
          if (result.inf) return result;
        }
      }
    }
  return result;
}

ExtRat rho_eqposet(const EquivPoset& S, int cap) {
  return rho_weighted(S.base(), p_tilde(S), ordinary_chains(S.base()), cap);
}

static Rat mu_of_class(const EquivPoset& S, const std::vector<int>& W,
                       const std::vector<ExtNat>& p, const ChainPred& pred) {
  Rat total = 0;
  for (int d : W) total += rho_point(weight_of(p, S.incomparables(d), pred) + ExtNat(1));
  return total;
}

Rat mu_class(const EquivPoset& S, const std::vector<int>& W) {
  if (W.size() <= 2) throw ClassTooSmall("mu needs an equivalence class with more than two points");
  return mu_of_class(S, W, p_tilde(S), ordinary_chains(S.base()));
}

Rat mu_weighted(const EquivPoset& S, const std::vector<ExtNat>& p, const ChainPred& pred) {
  Rat best = 0;
  for (const auto& W : S.classes())
    if (W.size() > 2) best = std::max(best, mu_of_class(S, W, p, pred));
  return best;
}

Rat mu_eqposet(const EquivPoset& S) {
  return mu_weighted(S, p_tilde(S), ordinary_chains(S.base()));
}

RepType classify_eqposet(const EquivPoset& S, int cap) {
  ExtRat rho = rho_eqposet(S, cap);
  Rat mu = mu_eqposet(S);
  ExtRat four{false, Rat(4)};
  ExtRat m = rho < ExtRat{false, mu} ? ExtRat{false, mu} : rho;
  if (m < four) return RepType::Finite;
  if (m == four) return RepType::Tame;
  return RepType::Wild;
}

EquivPoset reduce_normal1(const EquivPoset& S, int x) {
  if (S.dim(x) != 2) throw NotReducible("reduction needs a point of dimension 2");
  if (normality_degree(S, x).degree != std::optional<int>(1))
    throw NotReducible("reduction needs a 1-normal point");
  int xs = S.partner(x);
  ExtNat t = p_tilde(S)[xs];
  const int n = S.size();
  std::vector<int> keep;
  for (int s = 0; s < n; ++s)
    if (s != x && s != xs) keep.push_back(s);
  const int k = static_cast<int>(keep.size());
  const int m = static_cast<int>(t.value());
  Poset P(k + m);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (S.base().lt(keep[a], keep[b])) P.add_lt(a, b);
  for (int i = 0; i + 1 < m; ++i) P.add_lt(k + i, k + i + 1);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < k; ++a) {
      if (S.base().lt(xs, keep[a])) P.add_lt(k + i, a);
      if (S.base().lt(keep[a], xs)) P.add_lt(a, k + i);
    }
  std::vector<int> ids(k + m);
  int fresh = *std::max_element(S.class_ids().begin(), S.class_ids().end()) + 1;
  for (int a = 0; a < k; ++a) ids[a] = S.class_of(keep[a]);
  for (int i = 0; i < m; ++i) ids[k + i] = fresh++;
  return EquivPoset::from_class_ids(std::move(P), std::move(ids));
}

Poset grid_poset(int a, int b) {
  Poset P(a * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) P.add_lt(i * b + j, (i + 1) * b + j);
      if (j + 1 < b) P.add_lt(i * b + j, i * b + j + 1);
    }
  return P;
}

Poset grid_union_poset(int u, int a, int b) {
  if (u < 1 || a < 1 || b < 1) throw InputError("grid union needs u, a, b >= 1");
  return poset_disjoint_union(chain_poset(u - 1), grid_poset(a + 1, b + 1));
}

EquivPoset reduce_dim3(const EquivPoset& S, int y) {
  if (S.dim(y) != 3) throw NotReducible("reduction needs a point of dimension 3");
  auto deg = normality_degrees(S);
  std::vector<int> others;
  for (int s : S.members(y))
    if (s != y) others.push_back(s);
  int u = others[0], v = others[1];
  if (deg[u] != std::optional<int>(1) || deg[v] != std::optional<int>(1))
    throw NotReducible("the other two class members must be 1-normal");
  const int a = 2 + popcount(S.incomparables(u)), b = 2 + popcount(S.incomparables(v));
  const int n = S.size();
  std::vector<int> keep;
  for (int s = 0; s < n; ++s)
    if (s != y && s != u && s != v) keep.push_back(s);
  const int k = static_cast<int>(keep.size()), g = a * b;
  Poset P(k + g);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (S.base().lt(keep[i], keep[j])) P.add_lt(i, j);
  Poset grid = grid_poset(a, b);
  for (auto [i, j] : grid.covers()) P.add_lt(k + i, k + j);
  for (int c = 0; c < g; ++c)
    for (int i = 0; i < k; ++i) {
      if (S.base().lt(y, keep[i])) P.add_lt(k + c, i);
      if (S.base().lt(keep[i], y)) P.add_lt(i, k + c);
    }
  std::vector<int> ids(k + g);
  int fresh = *std::max_element(S.class_ids().begin(), S.class_ids().end()) + 1;
  for (int i = 0; i < k; ++i) ids[i] = S.class_of(keep[i]);
  for (int c = 0; c < g; ++c) ids[k + c] = fresh++;
  return EquivPoset::from_class_ids(std::move(P), std::move(ids));
}

bool is_perfectly_chain(const EquivPoset& S) {
  auto deg = normality_degrees(S);
  for (const auto& W : S.classes()) {
    if (W.size() == 2 && !deg[W[0]] && !deg[W[1]]) return false;
    if (W.size() == 3) {
      int ones = 0;
      for (int s : W)
        if (deg[s] == std::optional<int>(1)) ++ones;
      if (ones < 2) return false;
    }
  }
  return true;
}

bool is_quasiantichain(const EquivPoset& S) {
  if (S.dim() != 2) return false;
  for (const auto& d : normality_degrees(S))
    if (d) return false;
  return true;
}

NamedExample worked_example_eqposet() {
  enum { X, XS, Y, YS, A, B };
  Poset P = make_poset(6, {{X, A}, {X, XS}, {X, Y}, {X, YS}, {Y, A}, {Y, YS}, {B, XS}});
  return {EquivPoset(P, {{X, XS}, {Y, YS}}), X, XS, Y, YS, A, B};
}

}  // namespace reptype
