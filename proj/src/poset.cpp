#include "reptype/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "reptype/linalg.hpp"
#include "reptype/separating.hpp"

namespace reptype {

// ---- Poset basics

Mask Poset::incomparable_mask(int i) const { return all() & ~(up_[i] | down_[i] | bit(i)); }

void Poset::add_lt(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InputError("poset index out of range");
  if (i == j || lt(j, i)) throw CycleDetected("cover list contains a cycle");
  if (lt(i, j)) return;
  Mask below = down_[i] | bit(i), above = up_[j] | bit(j);
  for (int a = 0; a < n_; ++a)
    if (below >> a & 1) up_[a] |= above;
  for (int b = 0; b < n_; ++b)
    if (above >> b & 1) down_[b] |= below;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (lt(i, j) && (up_[i] & down_[j]) == 0) out.emplace_back(i, j);
  return out;
}

Poset Poset::induced(const std::vector<int>& keep) const {
  Poset P(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (lt(keep[a], keep[b])) {
        P.up_[a] |= bit(b);
        P.down_[b] |= bit(a);
      }
  return P;
}

Poset Poset::induced(Mask keep) const {
  std::vector<int> idx;
  for (int i = 0; i < n_; ++i)
    if (keep >> i & 1) idx.push_back(i);
  return induced(idx);
}

bool Poset::is_chain(Mask set) const {
  for (int i = 0; i < n_; ++i)
    if ((set >> i & 1) && (incomparable_mask(i) & set)) return false;
  return true;
}

bool Poset::is_antichain(Mask set) const {
  for (int i = 0; i < n_; ++i)
    if ((set >> i & 1) && (comparable_mask(i) & set)) return false;
  return true;
}

bool Poset::is_connected() const {
  if (n_ == 0) return true;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int i = 0; i < n_; ++i)
      if (frontier >> i & 1) next |= comparable_mask(i);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all();
}

Relation Poset::to_relation() const {
  Relation R(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (le(i, j)) R.set(i, j);
  return R;
}

Poset make_poset(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 0 || n > 64) throw InputError("poset size must be in 0..64");
  Poset P(n);
  for (auto [i, j] : covers) P.add_lt(i, j);
  return P;
}

Poset chain_poset(int n) {
  Poset P(n);
  for (int i = 0; i + 1 < n; ++i) P.add_lt(i, i + 1);
  return P;
}

Poset poset_disjoint_union(const Poset& a, const Poset& b) {
  Poset P(a.size() + b.size());
  for (auto [i, j] : a.covers()) P.add_lt(i, j);
  for (auto [i, j] : b.covers()) P.add_lt(a.size() + i, a.size() + j);
  return P;
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  Poset P = poset_disjoint_union(a, b);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) P.add_lt(i, a.size() + j);
  return P;
}

Poset primitive_poset(const std::vector<int>& chains) {
  Poset P;
  for (int c : chains) P = poset_disjoint_union(P, chain_poset(c));
  return P;
}

Poset n_hat() { return make_poset(4, {{0, 1}, {2, 3}, {0, 3}}); }

int width(const Poset& S) {
  // Dilworth: width = n - maximum matching in the strict-order bipartite graph.
  const int n = S.size();
  std::vector<int> match_r(n, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int u, std::vector<char>& seen) {
    for (int v = 0; v < n; ++v) {
      if (!S.lt(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_r[v] < 0 || augment(match_r[v], seen)) {
        match_r[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (augment(u, seen)) ++matched;
  }
  return n - matched;
}

int longest_chain(const Poset& S, Mask within) {
  const int n = S.size();
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (within >> i & 1) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(S.down(a)) < popcount(S.down(b)); });
  std::vector<int> len(n, 0);
  int best = 0;
  for (int i : order) {
    int l = 1;
    for (int j = 0; j < n; ++j)
      if ((within >> j & 1) && S.lt(j, i)) l = std::max(l, len[j] + 1);
    len[i] = l;
    best = std::max(best, l);
  }
  return best;
}

std::string to_string(RepType t) {
  switch (t) {
    case RepType::Finite: return "finite";
    case RepType::Tame: return "tame";
    case RepType::Wild: return "wild";
  }
  return "?";
}

static void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
}

// ---- rho_1: best disjoint union of pairwise incomparable chains

Rat primitive_value(const Poset& S, int cap) {
  check_cap(S.size(), cap, "primitive_value");
  const int n = S.size();
  std::vector<Rat> rho(n + 2);
  for (int k = 0; k <= n + 1; ++k) rho[k] = rho_point(static_cast<std::uint64_t>(k));
  // comp[i] = mask of the chain component containing chosen point i
  Rat best = 0;
  std::vector<Mask> comps;
  std::function<void(int, Mask, Rat)> dfs = [&](int i, Mask chosen, Rat val) {
    if (val > best) best = val;
    if (i == n) return;
    if (val + (n - i) <= best) return;  // each point adds at most 1
    Mask touch = S.comparable_mask(i) & chosen;
    int hit = -1;
    bool ok = true;
    if (touch) {
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (comps[c] & touch) {
          if (hit >= 0 || comps[c] != touch) ok = false;
          hit = static_cast<int>(c);
        }
    }
    if (ok) {
      if (hit < 0) {
        comps.push_back(bit(i));
        dfs(i + 1, chosen | bit(i), val + 1);
        comps.pop_back();
      } else {
        int k = popcount(comps[hit]);
        comps[hit] |= bit(i);
        dfs(i + 1, chosen | bit(i), val - rho[k] + rho[k + 1]);
        comps[hit] &= ~bit(i);
      }
    }
    dfs(i + 1, chosen, val);
  };
  dfs(0, 0, Rat(0));
  return best;
}

// ---- rho_2: N-hat plus a chain incomparable to it

int quasiprimitive_value(const Poset& S, int cap) {
  check_cap(S.size(), cap, "quasiprimitive_value");
  const int n = S.size();
  int best = 0;
  // a1 < a2, b1 < b2, a1 < b2; a1 || b1, a2 || b1, a2 || b2
  for (int a1 = 0; a1 < n; ++a1)
    for (int b2 = 0; b2 < n; ++b2) {
      if (!S.lt(a1, b2)) continue;
      for (int a2 = 0; a2 < n; ++a2) {
        if (!S.lt(a1, a2) || S.comparable(a2, b2)) continue;
        for (int b1 = 0; b1 < n; ++b1) {
          if (!S.lt(b1, b2) || S.comparable(b1, a1) || S.comparable(b1, a2)) continue;
          Mask free = S.incomparable_mask(a1) & S.incomparable_mask(a2) &
                      S.incomparable_mask(b1) & S.incomparable_mask(b2);
          best = std::max(best, longest_chain(S, free));
        }
      }
    }
  return best;
}

Rat rho_poset(const Poset& S, int cap) {
  Rat r1 = primitive_value(S, cap);
  Rat r2 = quasiprimitive_value(S, cap);
  return r1 < r2 ? r2 : r1;
}

RepType classify_poset(const Poset& S, int cap) {
  int c = cmp(rho_poset(S, cap), Rat(4));
  if (c < 0) return RepType::Finite;
  if (c == 0) return RepType::Tame;
  return RepType::Wild;
}

// ---- critical lists

const std::vector<CriticalPoset>& critical_posets() {
  static const std::vector<CriticalPoset> list = [] {
    std::vector<CriticalPoset> v;
    v.push_back({"K1", primitive_poset({1, 1, 1, 1}), true});
    v.push_back({"K2", primitive_poset({2, 2, 2}), true});
    v.push_back({"K3", primitive_poset({1, 3, 3}), true});
    v.push_back({"K4", primitive_poset({1, 2, 5}), true});
    v.push_back({"K5", poset_disjoint_union(chain_poset(4), n_hat()), true});
    v.push_back({"N0", primitive_poset({1, 1, 1, 1, 1}), false});
    v.push_back({"N1", primitive_poset({1, 1, 1, 2}), false});
    v.push_back({"N2", primitive_poset({2, 2, 3}), false});
    v.push_back({"N3", primitive_poset({1, 3, 4}), false});
    v.push_back({"N4", primitive_poset({1, 2, 6}), false});
    v.push_back({"N5", poset_disjoint_union(chain_poset(5), n_hat()), false});
    return v;
  }();
  return list;
}

std::vector<std::vector<int>> embeddings(const Poset& pattern, const Poset& host, bool first_only) {
  const int k = pattern.size(), n = host.size();
  std::set<std::vector<int>> images;
  std::vector<int> map(k, -1);
  std::function<bool(int, Mask)> rec = [&](int i, Mask used) -> bool {
    if (i == k) {
      std::vector<int> img = map;
      std::sort(img.begin(), img.end());
      images.insert(img);
      return first_only;
    }
    for (int h = 0; h < n; ++h) {
      if (used >> h & 1) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.lt(j, i) == host.lt(map[j], h) && pattern.lt(i, j) == host.lt(h, map[j]);
      if (!ok) continue;
      map[i] = h;
      if (rec(i + 1, used | bit(h))) return true;
    }
    return false;
  };
  if (k <= n) rec(0, 0);
  return {images.begin(), images.end()};
}

std::vector<CriticalHit> contains_critical(const Poset& S, bool first_per_pattern, int cap) {
  check_cap(S.size(), cap, "contains_critical");
  std::vector<CriticalHit> out;
  for (const auto& c : critical_posets())
    for (auto& img : embeddings(c.poset, S, first_per_pattern)) out.push_back({c.name, img});
  return out;
}

// ---- wattles

Wattle make_wattle(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw BadSizes("a wattle needs at least two chains");
  for (int s : sizes)
    if (s < 2) throw BadSizes("wattle chains need at least two points");
  Wattle w;
  w.sizes = sizes;
  const int t = static_cast<int>(sizes.size());
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  w.poset = Poset(n);
  w.z_minus.assign(t, -1);
  w.z_plus.assign(t, -1);
  std::vector<int> bottom(t), top(t);
  int at = 0;
  for (int c = 0; c < t; ++c) {
    bottom[c] = at;
    top[c] = at + sizes[c] - 1;
    for (int k = 0; k < sizes[c]; ++k) {
      w.chain_of.push_back(c);
      if (k > 0) w.poset.add_lt(at + k - 1, at + k);
    }
    at += sizes[c];
  }
  for (int c = 0; c + 1 < t; ++c) w.poset.add_lt(bottom[c], top[c + 1]);
  for (int c = 0; c < t; ++c) {
    if (c + 1 < t) w.z_minus[c] = bottom[c];
    if (c > 0) w.z_plus[c] = top[c];
  }
  for (int i = 0; i < n; ++i) {
    int c = w.chain_of[i];
    if (i != w.z_minus[c] && i != w.z_plus[c]) w.common.push_back(i);
  }
  return w;
}

namespace {

struct UniformShape {
  bool ab = false;
  int k = 0, m = 0, t = 0;
  std::vector<int> long_positions;  // 1-based chain indices of length k+1
};

UniformShape shape_of(const std::vector<int>& sizes) {
  UniformShape s;
  s.t = static_cast<int>(sizes.size());
  s.k = sizes.front();
  bool ok = sizes.back() == s.k;
  for (int i = 1; i + 1 < s.t; ++i) {
    if (sizes[i] < s.k || sizes[i] > s.k + 1) ok = false;
    if (sizes[i] == s.k + 1) s.long_positions.push_back(i + 1);
  }
  s.m = static_cast<int>(s.long_positions.size());
  s.ab = ok;
  return s;
}

}  // namespace

bool is_uniform_wattle(const std::vector<int>& sizes) {
  make_wattle(sizes);  // validates
  UniformShape s = shape_of(sizes);
  if (!s.ab) return false;
  if (std::gcd(s.m + 1, s.t) != 1) return false;
  for (int i = 1; i <= s.m; ++i)
    if (s.long_positions[i - 1] != (i * s.t) / (s.m + 1) + 1) return false;
  return true;
}

bool uniform_by_counting(const std::vector<int>& sizes) {
  make_wattle(sizes);
  UniformShape s = shape_of(sizes);
  if (!s.ab) return false;
  if (std::gcd(s.m + 1, s.t) != 1) return false;
  // number of long chains among Z_2..Z_i must be floor(i(1+m)/t) for i < t
  int count = 0;
  for (int i = 2; i < s.t; ++i) {
    if (sizes[i - 1] == s.k + 1) ++count;
    if (count != (i * (1 + s.m)) / s.t) return false;
  }
  return true;
}

std::optional<WattleVector> wattle_positive_vector(const std::vector<int>& sizes) {
  if (!is_uniform_wattle(sizes)) return std::nullopt;
  Wattle w = make_wattle(sizes);
  const int n = w.poset.size(), t = static_cast<int>(sizes.size());
  const int ia = n, ib = n + 1, dim = n + 2;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  auto row = [&]() -> std::vector<Rat>& {
    A.emplace_back(dim, Rat(0));
    b.emplace_back(0);
    return A.back();
  };
  for (int c : w.common) {
    auto& r = row();
    r[c] = 1;
    r[ia] = -1;
  }
  for (int c = 0; c + 1 < t; ++c) {
    auto& r = row();
    r[w.z_minus[c]] = 1;
    r[w.z_plus[c + 1]] = 1;
    r[ia] = -1;
  }
  for (int c = 0; c < t; ++c) {
    auto& r = row();
    for (int i = 0; i < n; ++i)
      if (w.chain_of[i] == c) r[i] = 1;
    r[ib] = -1;
  }
  {
    auto& r = row();
    for (int i = 0; i < n; ++i) r[i] = 1;
    b.back() = 1;
  }
  if (static_cast<int>(A.size()) != dim || !solve_linear(A, b)) return std::nullopt;
  WattleVector out;
  out.x.assign(b.begin(), b.begin() + n);
  out.alpha = b[ia];
  out.beta = b[ib];
  out.gamma = out.x[w.z_minus[0]];
  for (const auto& v : out.x)
    if (v <= 0) return std::nullopt;
  return out;
}

// ---- ordinal sums and semilinearity

bool is_ordinal_sum_of(const Poset& S, const std::vector<Poset>& blocks) {
  // Summands are the connected components of the incomparability graph.
  const int n = S.size();
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen >> s & 1) continue;
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      Mask next = 0;
      for (int i = 0; i < n; ++i)
        if (frontier >> i & 1) next |= S.incomparable_mask(i);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    Poset part = S.induced(comp);
    bool matched = std::any_of(blocks.begin(), blocks.end(),
                               [&](const Poset& b) { return isomorphic(b, part); });
    if (!matched) return false;
  }
  return true;
}

Semilinear is_semilinear_poset(const Poset& S) {
  if (S.is_chain(S.all())) return Semilinear::AlreadyLinear;
  for (int i = 0; i < S.size(); ++i)
    if (popcount(S.incomparable_mask(i)) > 1) return Semilinear::No;
  return Semilinear::Yes;
}

// ---- canonical forms

namespace {

std::string form_under(const Poset& S, const std::vector<int>& perm) {
  // perm[pos] = original element placed at position pos
  const int n = S.size();
  std::string s(static_cast<std::size_t>(n) * n, '0');
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (S.lt(perm[a], perm[b])) s[static_cast<std::size_t>(a) * n + b] = '1';
  return s;
}

}  // namespace

std::string canonical_form(const Poset& S) {
  const int n = S.size();
  // Isomorphism-invariant key per element; only permutations that keep the
  // key order are tried.
  std::vector<std::tuple<int, int, int, int>> key(n);
  for (int i = 0; i < n; ++i) {
    int cov_below = 0, cov_above = 0;
    for (int j = 0; j < n; ++j) {
      if (S.lt(j, i) && (S.up(j) & S.down(i)) == 0) ++cov_below;
      if (S.lt(i, j) && (S.up(i) & S.down(j)) == 0) ++cov_above;
    }
    key[i] = {popcount(S.down(i)), popcount(S.up(i)), cov_below, cov_above};
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  std::string best;
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      std::string f = form_under(S, order);
      if (best.empty() || f < best) best = f;
      return;
    }
    auto [b, e] = blocks[bi];
    do {
      rec(bi + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return std::to_string(n) + ":" + best;
}

std::string canonical_form_full(const Poset& S) {
  std::vector<int> perm(S.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string f = form_under(S, perm);
    if (best.empty() || f < best) best = f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(S.size()) + ":" + best;
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Poset> enumerate_posets(int n, bool connected_only, int cap) {
  check_cap(n, cap, "enumerate_posets");
  if (n <= 0) return {};
  std::vector<Poset> level{Poset(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Poset> next;
    for (const auto& P : level) {
      const int m = P.size();
      for (Mask ideal = 0; ideal < bit(m); ++ideal) {
        bool closed = true;
        for (int i = 0; i < m && closed; ++i)
          if ((ideal >> i & 1) && (P.down(i) & ~ideal)) closed = false;
        if (!closed) continue;
        Poset Q(m + 1);
        for (auto [i, j] : P.covers()) Q.add_lt(i, j);
        for (int i = 0; i < m; ++i)
          if (ideal >> i & 1) Q.add_lt(i, m);
        next.emplace(canonical_form(Q), std::move(Q));
      }
    }
    level.clear();
    for (auto& [f, Q] : next) level.push_back(std::move(Q));
  }
  if (connected_only)
    std::erase_if(level, [](const Poset& P) { return !P.is_connected(); });
  return level;
}

bool recognize_wattle(const Poset& S, std::vector<int>* sizes) {
  const int n = S.size();
  if (n < 4 || !S.is_connected()) return false;
  std::string target = canonical_form(S);
  std::vector<int> cur;
  std::function<bool(int)> rec = [&](int left) -> bool {
    if (left == 0) {
      if (cur.size() < 2) return false;
      if (canonical_form(make_wattle(cur).poset) == target) {
        if (sizes) *sizes = cur;
        return true;
      }
      return false;
    }
    for (int part = 2; part <= left; ++part) {
      cur.push_back(part);
      if (rec(left - part)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(n);
}

Conjecture1Report verify_conjecture1(int max_n, int cap) {
  check_cap(max_n, cap, "verify_conjecture1");
  Conjecture1Report rep;
  rep.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& P : enumerate_posets(n, true, cap)) {
      ++rep.posets_checked[n];
      if (!is_p_faithful(P.to_relation()).faithful) continue;
      ++rep.faithful[n];
      if (P.is_chain(P.all())) continue;
      std::vector<int> sizes;
      if (recognize_wattle(P, &sizes) && is_uniform_wattle(sizes)) continue;
      rep.counterexamples.push_back(P);
    }
  }
  return rep;
}

}  // namespace reptype
