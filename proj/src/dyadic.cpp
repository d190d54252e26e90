#include "reptype/dyadic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "reptype/separating.hpp"

namespace reptype {

namespace {

std::string pair_str(const PointPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string pairs_str(const std::vector<PointPair>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + pair_str(p);
  return s;
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; m >> i; ++i)
    if (m >> i & 1) {
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return s + "}";
}

// points incomparable to every point of Z; all of S for empty Z
Mask incomparable_to_all(const Poset& S, Mask Z) {
  Mask m = S.all();
  for (int i = 0; Z >> i; ++i)
    if (Z >> i & 1) m &= S.incomparable_mask(i);
  return m;
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom_, std::vector<PointPair> pairs_)
    : InputError("biequivalence axiom " + axiom_ + " fails at " + pairs_str(pairs_)),
      axiom(std::move(axiom_)),
      pairs(std::move(pairs_)) {}

// ---- BiequivPoset

BiequivPoset::BiequivPoset(Poset base, const std::vector<std::vector<PointPair>>& classes,
                           bool validate)
    : base_(std::move(base)) {
  const int n = base_.size();
  cls_.assign(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  for (const auto& c : classes) {
    if (c.empty()) continue;
    for (auto [s, t] : c) {
      if (s < 0 || t < 0 || s >= n || t >= n) throw InputError("pair index out of range");
      if (!base_.le(s, t)) throw InputError("pair " + pair_str({s, t}) + " is not s <= t");
      if (cls_[s * n + t] >= 0) throw InputError("pair " + pair_str({s, t}) + " listed twice");
      cls_[s * n + t] = next;
    }
    ++next;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (base_.le(s, t) && cls_[s * n + t] < 0) cls_[s * n + t] = next++;
  std::vector<int> count(next, 0);
  for (int c : cls_)
    if (c >= 0) ++count[c];
  tri_up_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (base_.lt(x, y) && count[cls_[x * n + y]] == 1) tri_up_[x] |= bit(y);
  if (validate)
    if (auto v = validate_biequivalence(*this)) throw *v;
}

BiequivPoset BiequivPoset::trivial(Poset base) { return BiequivPoset(std::move(base), {}); }

BiequivPoset BiequivPoset::lift(const EquivPoset& S) {
  std::vector<std::vector<PointPair>> classes;
  for (const auto& c : S.classes()) {
    std::vector<PointPair> ps;
    for (int s : c) ps.emplace_back(s, s);
    classes.push_back(ps);
  }
  return BiequivPoset(S.base(), classes);
}

int BiequivPoset::pair_class(int s, int t) const { return cls_[s * size() + t]; }

std::vector<PointPair> BiequivPoset::pair_members(int s, int t) const {
  const int n = size();
  int c = pair_class(s, t);
  if (c < 0) throw NotComparable("pair " + pair_str({s, t}) + " is not s <= t");
  std::vector<PointPair> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cls_[a * n + b] == c) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<PointPair>> BiequivPoset::pair_classes() const {
  const int n = size();
  std::map<int, std::vector<PointPair>> g;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cls_[a * n + b] >= 0) g[cls_[a * n + b]].emplace_back(a, b);
  std::vector<std::vector<PointPair>> out;
  for (auto& [id, ps] : g)
    if (ps.size() > 1) out.push_back(ps);
  std::sort(out.begin(), out.end());
  return out;
}

EquivPoset BiequivPoset::tilde() const {
  std::vector<int> ids(size());
  for (int s = 0; s < size(); ++s) ids[s] = pair_class(s, s);
  return EquivPoset::from_class_ids(base_, ids);
}

int BiequivPoset::rank(int x, int y) const {
  if (!base_.lt(x, y)) throw NotComparable("rank needs x < y");
  return static_cast<int>(pair_members(x, y).size());
}

bool BiequivPoset::one_chain(Mask Z) const {
  if (!base_.is_chain(Z)) return false;
  for (int i = 0; Z >> i; ++i)
    if ((Z >> i & 1) && (Z & base_.up(i) & ~tri_up_[i])) return false;
  return true;
}

ChainPred BiequivPoset::one_chain_pred() const {
  return [this](Mask Z) { return one_chain(Z); };
}

BiequivPoset BiequivPoset::induced(const std::vector<int>& keep) const {
  const int n = size();
  std::vector<int> where(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<int>(i);
  std::map<int, std::vector<PointPair>> g;
  for (int a : keep)
    for (int b : keep)
      if (cls_[a * n + b] >= 0) g[cls_[a * n + b]].emplace_back(where[a], where[b]);
  std::vector<std::vector<PointPair>> classes;
  for (auto& [id, ps] : g) classes.push_back(ps);
  return BiequivPoset(base_.induced(keep), classes, false);
}

std::optional<AxiomViolation> validate_biequivalence(const BiequivPoset& B) {
  const Poset& S = B.base();
  const int n = B.size();
  for (const auto& c : B.pair_classes()) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i].first == c[j].first || c[i].second == c[j].second)
          return AxiomViolation("i", {c[i], c[j]});
    for (const auto& [s1, t1] : c)
      for (const auto& [s2, t2] : c) {
        if (s1 == s2 && t1 == t2) continue;
        for (int x1 = 0; x1 < n; ++x1) {
          if (!S.le(s1, x1) || !S.le(x1, t1)) continue;
          int found = 0;
          for (int x2 = 0; x2 < n; ++x2)
            if (S.le(s2, x2) && S.le(x2, t2) && B.pair_class(s1, x1) == B.pair_class(s2, x2) &&
                B.pair_class(x1, t1) == B.pair_class(x2, t2))
              ++found;
          if (found != 1) return AxiomViolation("ii", {{s1, t1}, {s2, t2}, {x1, x1}});
        }
      }
  }
  // consequences of i and ii, checked rather than assumed
  for (const auto& c : B.pair_classes()) {
    bool diag = std::any_of(c.begin(), c.end(), [](const PointPair& p) { return p.first == p.second; });
    for (const auto& p : c)
      if (diag && p.first != p.second) return AxiomViolation("iii", {c.front(), p});
    for (const auto& [s1, t1] : c)
      for (const auto& [s2, t2] : c)
        if (B.pair_class(s1, s1) != B.pair_class(s2, s2) ||
            B.pair_class(t1, t1) != B.pair_class(t2, t2))
          return AxiomViolation("iv", {{s1, t1}, {s2, t2}});
  }
  return std::nullopt;
}

std::string to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Triangle: return "triangle";
    case PairRelation::DoubleArrow: return "double-arrow";
    case PairRelation::Incomparable: return "incomparable";
    case PairRelation::Above: return "above";
  }
  return "?";
}

PairRelation relation(const BiequivPoset& B, int x, int y) {
  if (x == y) return B.tilde().small(x) ? PairRelation::Triangle : PairRelation::DoubleArrow;
  if (B.base().lt(x, y)) return B.rank(x, y) == 1 ? PairRelation::Triangle : PairRelation::DoubleArrow;
  if (B.base().lt(y, x)) return PairRelation::Above;
  return PairRelation::Incomparable;
}

bool is_transitive_biequiv(const BiequivPoset& B) {
  const Poset& S = B.base();
  const int n = B.size();
  for (int s1 = 0; s1 < n; ++s1)
    for (int t1 = 0; t1 < n; ++t1) {
      if (!S.le(s1, t1)) continue;
      for (const auto& [s2, t2] : B.pair_members(s1, t1))
        for (int u1 = 0; u1 < n; ++u1) {
          if (!S.le(t1, u1)) continue;
          for (const auto& [t2b, u2] : B.pair_members(t1, u1))
            if (t2b == t2 && B.pair_class(s1, u1) != B.pair_class(s2, u2)) return false;
        }
    }
  return true;
}

std::vector<ExtNat> p_hat(const BiequivPoset& B) { return p_tilde(B.tilde(), B.one_chain_pred()); }

ExtRat rho_hat(const BiequivPoset& B, int cap) {
  return rho_weighted(B.base(), p_hat(B), B.one_chain_pred(), cap);
}

Prop6Report prop6_report(const BiequivPoset& B, int cap) {
  Prop6Report r;
  r.rho = rho_hat(B, cap);
  r.mu = mu_weighted(B.tilde(), p_hat(B), B.one_chain_pred());
  ExtRat four{false, Rat(4)};
  r.holds = r.rho < four && r.mu < 4;
  return r;
}

bool prop6_necessary(const BiequivPoset& B, int cap) { return prop6_report(B, cap).holds; }

// ---- DyadicSet

DyadicSet::DyadicSet(BiequivPoset inner) : inner_(std::move(inner)) {
  const int n = size();
  EquivPoset t = inner_.tilde();
  star_.resize(n);
  for (int s = 0; s < n; ++s) {
    if (t.dim(s) > 2) throw NotDyadic("dyadic set needs dimension <= 2");
    star_[s] = t.dim(s) == 2 ? t.partner(s) : s;
    if (!base().comparable(s, star_[s])) throw NotDyadic("s and s* must be comparable");
  }
  p_ = p_hat(inner_);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (base().lt(x, y) && inner_.rank(x, y) > 1) edges_.push_back({x, y});
  for (const auto& e : edges_) {
    Edge d = dual(e);
    if (d.x != star_[e.x] || d.y != star_[e.y])
      throw std::logic_error("dual edge does not pair the dual endpoints");
    if (base().lt(e.x, d.x) && !base().lt(e.y, d.y))
      throw std::logic_error("x < x* without y < y* on an edge");
  }
}

Edge DyadicSet::dual(const Edge& e) const {
  for (const auto& [a, b] : inner_.pair_members(e.x, e.y))
    if (a != e.x) return {a, b};
  throw InputError("not an edge");
}

bool DyadicSet::is_edge(int x, int y) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{x, y});
}

namespace {

// sigma <=_e tau
bool edge_le(const Poset& S, EdgeOrder order, const Edge& s, const Edge& t) {
  if (order == EdgeOrder::Containment) return S.le(t.x, s.x) && S.le(s.y, t.y);
  return S.le(t.x, s.x) && S.le(t.y, s.y);
}

}  // namespace

std::vector<EdgeShape> edge_shortness(const DyadicSet& D, EdgeOrder order) {
  const auto& E = D.edges();
  std::vector<EdgeShape> out;
  for (const auto& e : E) {
    EdgeShape sh{e, true, false, true};
    for (const auto& f : E) {
      if (f == e) continue;
      if (edge_le(D.base(), order, f, e)) sh.is_short = false;
      if (edge_le(D.base(), order, e, f)) sh.is_maximal = false;
    }
    sh.is_long = !sh.is_short;
    out.push_back(sh);
  }
  return out;
}

std::vector<std::vector<int>> strips(const DyadicSet& D, EdgeOrder order) {
  const int n = D.size();
  std::vector<char> has_in(n, 0), has_out(n, 0);
  std::vector<std::vector<int>> short_out(n);
  for (const auto& e : D.edges()) {
    has_out[e.x] = 1;
    has_in[e.y] = 1;
  }
  for (const auto& sh : edge_shortness(D, order))
    if (sh.is_short) short_out[sh.edge.x].push_back(sh.edge.y);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int v) {
    path.push_back(v);
    if (!has_out[v]) out.push_back(path);
    for (int w : short_out[v]) walk(w);
    path.pop_back();
  };
  for (int s = 0; s < n; ++s)
    if (D.big(s) && !has_in[s]) walk(s);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeContext equipment(const DyadicSet& D, const Edge& e) {
  const Poset& S = D.base();
  EdgeContext c;
  c.edge = e;
  c.interval = S.up(e.x) & S.down(e.y);
  c.l = popcount(c.interval);
  c.eq = S.incomparable_mask(e.x) & S.incomparable_mask(e.y);
  Mask mid = incomparable_to_all(S, c.interval);
  c.eq_minus = S.incomparable_mask(e.y) & mid;
  c.eq_plus = S.incomparable_mask(e.x) & mid;
  c.eq_value = weight_of(D.p(), c.eq, D.inner().one_chain_pred());
  return c;
}

ExtNat eq_between(const DyadicSet& D, int x, int y) {
  if (!D.base().lt(x, y)) throw NotComparable("eq needs x < y");
  Mask m = D.base().incomparable_mask(x) & D.base().incomparable_mask(y);
  return weight_of(D.p(), m, D.inner().one_chain_pred());
}

bool linearly_equipped(const DyadicSet& D) {
  return std::all_of(D.edges().begin(), D.edges().end(),
                     [&](const Edge& e) { return !equipment(D, e).eq_value.is_inf(); });
}

namespace {

// all 1-chains inside A, including the empty one
std::vector<Mask> one_chains_in(const DyadicSet& D, Mask A, std::size_t cap) {
  std::vector<Mask> out;
  std::vector<int> pts;
  for (int i = 0; A >> i; ++i)
    if (A >> i & 1) pts.push_back(i);
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask Z) {
    out.push_back(Z);
    if (out.size() > cap) throw CapExceeded("bordering sets exceed the configured cap");
    for (std::size_t j = k; j < pts.size(); ++j)
      if (D.inner().one_chain(Z | bit(pts[j]))) rec(j + 1, Z | bit(pts[j]));
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<BorderingSet> bordering_sets(const DyadicSet& D, const Edge& e, std::size_t cap) {
  const Poset& S = D.base();
  EdgeContext c = equipment(D, e);
  Mask finite = 0;
  for (int s = 0; s < D.size(); ++s)
    if (!D.p()[s].is_inf()) finite |= bit(s);
  std::vector<BorderingSet> out;
  for (Mask ze : one_chains_in(D, c.eq & finite, cap)) {
    if (c.l >= 2) {
      out.push_back({0, 0, ze});
      continue;
    }
    Mask free_m = c.eq_minus & finite & incomparable_to_all(S, ze);
    for (Mask zm : one_chains_in(D, free_m, cap)) {
      Mask free_p = c.eq_plus & finite & incomparable_to_all(S, ze | zm);
      for (Mask zp : one_chains_in(D, free_p, cap)) {
        out.push_back({zm, zp, ze});
        if (out.size() > cap) throw CapExceeded("bordering sets exceed the configured cap");
      }
    }
  }
  return out;
}

MuBreakdown mu_breakdown(const DyadicSet& D, const Edge& e, const BorderingSet& X) {
  auto pred = D.inner().one_chain_pred();
  EdgeContext c = equipment(D, e);
  MuBreakdown b;
  b.l = c.l;
  b.eq = weight_of(D.p(), X.z_e, pred);
  b.eq_dual = equipment(D, D.dual(e)).eq_value;
  ExtNat bound = static_cast<std::uint64_t>(std::abs(2 - c.l));
  b.eq_minus = std::min(weight_of(D.p(), X.z_minus, pred), bound);
  b.eq_plus = std::min(weight_of(D.p(), X.z_plus, pred), bound);
  b.eq_star = b.eq_dual + b.eq_minus + b.eq_plus;
  b.mu = mu3(b.eq, b.eq_star, static_cast<std::uint64_t>(c.l));
  return b;
}

ExtNat mu_sigma(const DyadicSet& D, const Edge& e, const BorderingSet& X) {
  return mu_breakdown(D, e, X).mu;
}

// ---- mu = 4 catalog

std::vector<MuEq4Tuple> enumerate_muEq4_tuples() {
  // mu = 4 forces every argument <= 4 (a value of 5 or more times a
  // nonzero partner already exceeds 4, and mu(n, 0, 0) = 0)
  std::vector<MuEq4Tuple> out;
  for (int l = 0; l <= 4; ++l) {
    int bound = l >= 2 ? 0 : std::abs(2 - l);
    for (int eq = 0; eq <= 4; ++eq)
      for (int dual = 0; dual <= 4; ++dual)
        for (int em = 0; em <= bound; ++em)
          for (int ep = 0; ep <= em; ++ep) {
            auto u = [](int v) { return ExtNat(static_cast<std::uint64_t>(v)); };
            if (mu3(u(eq), u(dual + em + ep), u(l)) == ExtNat(4)) out.push_back({l, eq, dual, em, ep});
          }
  }
  return out;
}

namespace {

// The numbered list as printed; in case 16 the printed variant
// "eq = 0, eq(sigma*) = 0" gives mu = 0 and is read as eq(sigma*) = 2.
const std::vector<MuEq4Case>& numbered_cases() {
  static const std::vector<MuEq4Case> cases = {
      {1, {{0, 1, 4, 0, 0}, {0, 4, 1, 0, 0}}},
      {2, {{0, 2, 2, 0, 0}}},
      {3, {{0, 1, 3, 1, 0}}},
      {4, {{0, 1, 2, 2, 0}}},
      {5, {{0, 1, 2, 1, 1}}},
      {6, {{0, 1, 1, 2, 1}}},
      {7, {{0, 2, 1, 1, 0}}},
      {8, {{0, 2, 0, 2, 0}}},
      {9, {{0, 2, 0, 1, 1}}},
      {10, {{0, 4, 0, 1, 0}}},
      {11, {{1, 0, 4, 0, 0}, {1, 4, 0, 0, 0}}},
      {12, {{1, 0, 3, 1, 0}}},
      {13, {{1, 0, 2, 1, 1}}},
      {14, {{1, 1, 1, 0, 0}}},
      {15, {{1, 1, 0, 1, 0}}},
      {16, {{2, 2, 0, 0, 0}, {2, 0, 2, 0, 0}}},
      {17, {{4, 1, 0, 0, 0}, {4, 0, 1, 0, 0}}},
  };
  return cases;
}

}  // namespace

std::vector<MuEq4Case> enumerate_muEq4_cases() {
  auto sys = enumerate_muEq4_tuples();
  std::set<MuEq4Tuple> found(sys.begin(), sys.end());
  for (const auto& c : numbered_cases())
    for (const auto& t : c.tuples)
      if (!found.count(t))
        throw std::logic_error("catalog case " + std::to_string(c.number) + " is not a mu = 4 tuple");
  return numbered_cases();
}

std::vector<MuEq4Tuple> muEq4_unlisted() {
  std::set<MuEq4Tuple> listed;
  for (const auto& c : numbered_cases()) listed.insert(c.tuples.begin(), c.tuples.end());
  std::vector<MuEq4Tuple> out;
  for (const auto& t : enumerate_muEq4_tuples())
    if (!listed.count(t)) out.push_back(t);
  return out;
}

std::optional<int> muEq4_case_of(const MuBreakdown& b) {
  for (const ExtNat* v : {&b.eq, &b.eq_dual, &b.eq_minus, &b.eq_plus})
    if (v->is_inf() || v->value() > 4) return std::nullopt;
  int em = static_cast<int>(b.eq_minus.value()), ep = static_cast<int>(b.eq_plus.value());
  if (em < ep) std::swap(em, ep);
  MuEq4Tuple t{b.l, static_cast<int>(b.eq.value()), static_cast<int>(b.eq_dual.value()), em, ep};
  for (const auto& c : numbered_cases())
    if (std::find(c.tuples.begin(), c.tuples.end(), t) != c.tuples.end()) return c.number;
  return std::nullopt;
}

// ---- classification

namespace {

// points joined by edges, merged with their duals: one id per pair of dual strips
std::vector<int> strip_pair_ids(const DyadicSet& D) {
  std::vector<int> id(D.size());
  std::iota(id.begin(), id.end(), 0);
  std::function<int(int)> find = [&](int a) { return id[a] == a ? a : id[a] = find(id[a]); };
  for (const auto& e : D.edges()) id[find(e.x)] = find(e.y);
  for (int s = 0; s < D.size(); ++s) id[find(s)] = find(D.star(s));
  for (int s = 0; s < D.size(); ++s) id[s] = find(s);
  return id;
}

}  // namespace

bool default_motif(const DyadicSet& D, const Edge& ab, const Edge& cd) {
  if (!D.base().le(ab.y, cd.x)) return false;
  auto id = strip_pair_ids(D);
  return id[ab.x] != id[cd.x];
}

DyadicVerdict classify_dyadic(const DyadicSet& D, const DyadicOptions& opt) {
  const Poset& S = D.base();
  const ExtRat four{false, Rat(4)};
  DyadicVerdict v;
  auto edge_str = [](const Edge& e) { return pair_str({e.x, e.y}); };

  ExtRat rt = rho_eqposet(D.inner().tilde(), opt.cap);
  if (!(rt < four)) {
    v.reason = "rho of the induced equivalence poset is " + to_string(rt) + " >= 4";
    return v;
  }

  for (const auto& sh : edge_shortness(D, opt.order)) {
    if (opt.scope == ConditionAScope::LongEdges && !sh.is_long) continue;
    for (const auto& X : bordering_sets(D, sh.edge)) {
      MuBreakdown b = mu_breakdown(D, sh.edge, X);
      if (b.mu < ExtNat(4)) continue;
      v.mu_case = muEq4_case_of(b);
      std::ostringstream os;
      os << "condition A: edge " << edge_str(sh.edge) << " with Z- " << mask_str(X.z_minus)
         << " Z+ " << mask_str(X.z_plus) << " Ze " << mask_str(X.z_e) << " has mu("
         << to_string(b.eq) << "," << to_string(b.eq_star) << "," << b.l
         << ") = " << to_string(b.mu);
      if (v.mu_case) os << " (case " << *v.mu_case << ")";
      v.reason = os.str();
      return v;
    }
  }

  for (const auto& e : D.edges()) {
    EdgeContext c = equipment(D, e);
    if (c.l != 1 || c.eq_value != ExtNat(3)) continue;
    Mask ia = incomparable_to_all(S, bit(e.x) | c.eq);
    Mask ib = incomparable_to_all(S, bit(e.y) | c.eq);
    if (ia || ib) {
      v.reason = "condition B: edge " + edge_str(e) + " has l = 1, eq = 3 and points " +
                 mask_str(ia | ib) + " incomparable to an end together with Eq";
      return v;
    }
  }

  const MotifPred& motif = opt.motif ? opt.motif : MotifPred(default_motif);
  for (const auto& ab : D.edges())
    for (const auto& cd : D.edges()) {
      if (!motif(D, ab, cd)) continue;
      if (!S.lt(ab.x, cd.y)) continue;
      Edge abs = D.dual(ab), cds = D.dual(cd);
      ExtNat m = mu3(eq_between(D, ab.x, cd.y), eq_between(D, abs.x, abs.y),
                     eq_between(D, cds.x, cds.y));
      if (m != ExtNat(0)) {
        v.reason = "condition C: edges " + edge_str(ab) + " and " + edge_str(cd) + " give mu = " +
                   to_string(m) + " != 0";
        return v;
      }
    }

  v.finite = true;
  return v;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> split_components(
    const BiequivPoset& B) {
  const int n = B.size();
  if (n < 2) return std::nullopt;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!B.base().comparable(a, b)) unite(a, b);
  for (const auto& c : B.pair_classes())
    for (const auto& [s, t] : c) {
      unite(s, t);
      unite(s, c.front().first);
    }
  std::vector<int> U, V;
  for (int s = 0; s < n; ++s) (find(s) == find(0) ? U : V).push_back(s);
  if (V.empty()) return std::nullopt;
  return std::make_pair(U, V);
}

bool is_critical_dyadic(const DyadicSet& D, const DyadicOptions& opt, int cap) {
  const int n = D.size();
  if (n > cap)
    throw CapExceeded("criticality scan: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (classify_dyadic(D, opt).finite) return false;
  auto finite = [&](const BiequivPoset& B) { return classify_dyadic(DyadicSet(B), opt).finite; };

  // proper *-closed subsets
  std::vector<Mask> orbits;
  for (int s = 0; s < n; ++s)
    if (D.star(s) >= s) orbits.push_back(bit(s) | bit(D.star(s)));
  const std::size_t k = orbits.size();
  for (unsigned long pick = 1; pick + 1 < (1UL << k); ++pick) {
    std::vector<int> keep;
    for (int s = 0; s < n; ++s)
      for (std::size_t o = 0; o < k; ++o)
        if ((pick >> o & 1) && (orbits[o] >> s & 1)) keep.push_back(s);
    std::sort(keep.begin(), keep.end());
    if (!finite(D.inner().induced(keep))) return false;
  }

  auto classes = D.inner().pair_classes();
  auto valid_dyadic = [](const BiequivPoset& B) -> std::optional<DyadicSet> {
    if (validate_biequivalence(B)) return std::nullopt;
    try {
      return DyadicSet(B);
    } catch (const NotDyadic&) {
      return std::nullopt;
    }
  };
  // strengthen <= by one relation
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || D.base().comparable(x, y)) continue;
      Poset P = D.base();
      P.add_lt(x, y);
      auto Dn = valid_dyadic(BiequivPoset(P, classes, false));
      if (Dn && !classify_dyadic(*Dn, opt).finite) return false;
    }
  // weaken the biequivalence by dissolving one class
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto fewer = classes;
    fewer.erase(fewer.begin() + static_cast<long>(i));
    auto Dn = valid_dyadic(BiequivPoset(D.base(), fewer, false));
    if (Dn && !classify_dyadic(*Dn, opt).finite) return false;
  }
  return true;
}

bool dual_comparability_holds(const DyadicSet& D) {
  if (!(rho_eqposet(D.inner().tilde()) < ExtRat{false, Rat(4)})) return true;
  const Poset& S = D.base();
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b) {
      if (!D.big(a) || !D.big(b) || b == a || b == D.star(a)) continue;
      if (!S.comparable(a, b) && !S.comparable(D.star(a), D.star(b))) return false;
    }
  return true;
}

bool equipment_implications_hold(const DyadicSet& D, const DyadicOptions& opt) {
  bool lin = linearly_equipped(D);
  if (classify_dyadic(D, opt).finite && !lin) return false;
  const ExtRat four{false, Rat(4)};
  if (lin && rho_eqposet(D.inner().tilde(), opt.cap) < four && !(rho_hat(D.inner(), opt.cap) < four))
    return false;
  return true;
}

bool short_edges_form_strips(const DyadicSet& D, EdgeOrder order) {
  if (!(rho_eqposet(D.inner().tilde()) < ExtRat{false, Rat(4)})) return true;
  std::vector<int> heads(D.size(), 0), tails(D.size(), 0);
  for (const auto& sh : edge_shortness(D, order))
    if (sh.is_short) {
      if (++tails[sh.edge.x] > 1 || ++heads[sh.edge.y] > 1) return false;
    }
  std::vector<int> seen(D.size(), 0);
  for (const auto& st : strips(D, order))
    for (int s : st) ++seen[s];
  for (int s = 0; s < D.size(); ++s)
    if (seen[s] != (D.big(s) ? 1 : 0)) return false;
  return true;
}

void for_each_dyadic_set(int n, const std::function<void(const DyadicSet&)>& visit, int cap) {
  for (const Poset& P : enumerate_posets(n, false, cap)) {
    std::vector<int> star(n);
    std::iota(star.begin(), star.end(), 0);
    std::function<void(int)> match = [&](int s) {
      while (s < n && star[s] != s) ++s;
      if (s == n) {
        std::vector<std::vector<PointPair>> point_classes;
        for (int a = 0; a < n; ++a)
          if (star[a] > a) point_classes.push_back({{a, a}, {star[a], star[a]}});
        // candidate edge classes {(u,v), (u*,v*)} between distinct big classes
        std::vector<std::vector<PointPair>> cand;
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            if (star[u] == u || star[v] == v || star[u] < u || v == star[u]) continue;
            if (P.lt(u, v) && P.lt(star[u], star[v])) cand.push_back({{u, v}, {star[u], star[v]}});
          }
        const std::size_t k = cand.size();
        for (unsigned long pick = 0; pick < (1UL << k); ++pick) {
          auto classes = point_classes;
          std::set<PointPair> used;
          bool clash = false;
          for (std::size_t i = 0; i < k && !clash; ++i)
            if (pick >> i & 1) {
              for (const auto& p : cand[i]) clash |= !used.insert(p).second;
              classes.push_back(cand[i]);
            }
          if (clash) continue;
          BiequivPoset B(P, classes, false);
          if (validate_biequivalence(B)) continue;
          visit(DyadicSet(B));
        }
        return;
      }
      match(s + 1);  // s stays small
      for (int t = s + 1; t < n; ++t)
        if (star[t] == t && P.comparable(s, t)) {
          star[s] = t;
          star[t] = s;
          match(s + 1);
          star[s] = s;
          star[t] = t;
        }
    };
    match(0);
  }
}

}  // namespace reptype
