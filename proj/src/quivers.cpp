#include "reptype/quivers.hpp"

#include <algorithm>
#include <map>

namespace reptype {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vertices_[i] == vertices_[j]) throw InputError("duplicate quiver vertex: " + vertices_[i]);
  if (arrows_.empty()) throw InputError("quiver has no arrows");
  for (const auto& a : arrows_)
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
      throw InputError("arrow endpoint out of range");
  LabeledGraph G(n);
  for (const auto& a : arrows_) G.add_edge(a.tail, a.head);
  if (!is_connected(G)) throw Disconnected("quiver is not connected");
}

int Quiver::find(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

bool is_semilinear_eqposet(const EquivPoset& S) {
  if (S.dim() > 2) return false;
  for (int s = 0; s < S.size(); ++s) {
    int c = popcount(S.base().comparable_mask(s));
    if (c > 1 || (c == 1 && S.dim(s) != 1)) return false;
  }
  return true;
}

bool is_linear_eqposet(const EquivPoset& S) {
  return S.dim() <= 1 && S.base().is_chain(S.base().all());
}

Marking Marking::linear(int n) {
  if (n < 1) throw InputError("linear marking needs n >= 1");
  Marking m;
  m.n = n;
  return m;
}

Marking Marking::semilinear(EquivPoset S) {
  if (!is_semilinear_eqposet(S)) throw NotSemilinear("marking is not semilinear");
  Marking m;
  m.kind = Kind::Semilinear;
  m.eqposet = std::move(S);
  return m;
}

Marking Marking::eq_poset(EquivPoset S) {
  Marking m;
  m.kind = Kind::EqPoset;
  m.eqposet = std::move(S);
  return m;
}

Marking Marking::dyadic_set(DyadicSet D) {
  Marking m;
  m.kind = Kind::Dyadic;
  m.dyadic = std::move(D);
  return m;
}

ExtNat Marking::v() const {
  switch (kind) {
    case Kind::Linear: return ExtNat(static_cast<std::uint64_t>(n));
    case Kind::Semilinear:
      if (is_linear_eqposet(eqposet)) return ExtNat(static_cast<std::uint64_t>(eqposet.size()));
      return ExtNat::inf();
    default: throw NotSemilinear("v is undefined for a non-semilinear marking");
  }
}

static void check_marks(const MarkedQuiver& Q) {
  if (static_cast<int>(Q.marks.size()) != Q.quiver.size())
    throw InputError("one marking per quiver vertex expected");
}

LabeledGraph gamma_vgraph(const MarkedQuiver& Q) {
  check_marks(Q);
  LabeledGraph G;
  for (int x = 0; x < Q.quiver.size(); ++x) G.add_vertex(Q.quiver.vertices()[x], Q.marks[x].v());
  for (const auto& a : Q.quiver.arrows()) G.add_edge(a.tail, a.head);
  return G;
}

RepType classify_semilinear(const MarkedQuiver& Q) {
  LabeledGraph G = gamma_vgraph(Q);
  RepType out = RepType::Finite;
  for (int x = 0; x < G.size(); ++x) {
    auto c = compare(rho_degree(G, x), Rat(4));
    if (c > 0) return RepType::Wild;
    if (c == 0) out = RepType::Tame;
  }
  return out;
}

Lemma13Shape lemma13_shape(const MarkedQuiver& Q, int x) {
  check_marks(Q);
  const Quiver& q = Q.quiver;
  const int l = q.size();
  if (x < 0 || x >= l) throw InputError("vertex out of range");
  if (l < 2) throw ShapeViolation("graph has a single vertex");
  if (static_cast<int>(q.arrows().size()) != l - 1) throw ShapeViolation("graph is not a path");
  std::vector<std::vector<int>> nbr(l);
  for (const auto& a : q.arrows()) {
    if (a.tail == a.head) throw ShapeViolation("graph has a loop");
    nbr[a.tail].push_back(a.head);
    nbr[a.head].push_back(a.tail);
  }
  for (int z = 0; z < l; ++z)
    if (nbr[z].size() > 2) throw ShapeViolation("graph branches at " + q.vertices()[z]);
  if (nbr[x].size() != 1) throw ShapeViolation("marked vertex is not an end of the path");

  Lemma13Shape out;
  out.path.push_back(x);
  for (int prev = -1, cur = x; static_cast<int>(out.path.size()) < l;) {
    int next = nbr[cur][0] != prev ? nbr[cur][0] : nbr[cur].at(1);
    prev = cur;
    cur = next;
    out.path.push_back(cur);
  }
  for (int i = 1; i + 1 < l; ++i) {
    const Marking& m = Q.marks[out.path[i]];
    if (!m.is_semilinear() || m.v() != ExtNat(1))
      throw ShapeViolation("inner vertex " + q.vertices()[out.path[i]] + " needs v = 1");
  }
  const Marking& end = Q.marks[out.path.back()];
  if (!end.is_semilinear() || end.v().is_inf())
    throw ShapeViolation("far end " + q.vertices()[out.path.back()] + " needs finite v");
  out.t = l + static_cast<int>(end.v().value()) - 3;
  for (const auto& a : q.arrows())
    if (a.tail == x || a.head == x) out.x_is_head = a.head == x;
  return out;
}

EquivPoset dual_eqposet(const EquivPoset& S) {
  const Poset& P = S.base();
  Poset R(P.size());
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (P.lt(i, j)) R.add_lt(j, i);
  return EquivPoset::from_class_ids(R, S.class_ids());
}

DyadicSet dual_dyadic(const DyadicSet& D) {
  const Poset& P = D.base();
  Poset R(P.size());
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (P.lt(i, j)) R.add_lt(j, i);
  auto classes = D.inner().pair_classes();
  for (auto& c : classes)
    for (auto& [s, t] : c) std::swap(s, t);
  return DyadicSet(BiequivPoset(R, classes));
}

namespace {

bool below(const ExtRat& r, const Rat& bound) { return !r.inf && r.value < bound; }
bool equals(const ExtRat& r, const Rat& bound) { return !r.inf && r.value == bound; }

// Ordinal sum of blocks (1), (1,1) and (1,2) with the dimension-2 conditions,
// and no copy of N^.
bool short_ordinal_shape(const EquivPoset& S) {
  const Poset& P = S.base();
  const int n = P.size();
  if (!embeddings(n_hat(), P, true).empty()) return false;
  // blocks of the finest ordinal decomposition: components of incomparability
  std::vector<int> block(n, -1);
  int nb = 0;
  for (int s = 0; s < n; ++s) {
    if (block[s] >= 0) continue;
    std::vector<int> stack{s};
    block[s] = nb;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      Mask inc = P.incomparable_mask(u);
      for (int w = 0; w < n; ++w)
        if ((inc >> w & 1) && block[w] < 0) {
          block[w] = nb;
          stack.push_back(w);
        }
    }
    ++nb;
  }
  for (int b = 0; b < nb; ++b) {
    Mask members = 0;
    for (int s = 0; s < n; ++s)
      if (block[s] == b) members |= bit(s);
    int size = popcount(members);
    bool one_two = false;
    if (size == 3) {
      int comparable_pairs = 0;
      for (int s = 0; s < n; ++s)
        if (members >> s & 1) comparable_pairs += popcount(P.up(s) & members);
      if (comparable_pairs != 1) return false;
      one_two = true;
    } else if (size > 3) {
      return false;
    }
    for (int s = 0; s < n; ++s) {
      if (!(members >> s & 1) || S.dim(s) != 2) continue;
      if (one_two) return false;
      if (size == 2 && P.incomparable_mask(S.partner(s)) != 0) return false;
    }
  }
  return true;
}

}  // namespace

RepType eqposet_marked_type(const EquivPoset& S, int t, int cap) {
  if (t < 0) throw InputError("negative t");
  if (t == 0) return classify_eqposet(S, cap);
  const int dim = S.dim();
  const ExtRat rho = rho_eqposet(S, cap);
  const Rat bound = 3 - rat(t - 1, t + 1);

  if (t == 1 && dim <= 2 && below(rho, Rat(3))) return RepType::Finite;
  if (t >= 2 && t <= 4 && dim <= 2 && below(rho, bound) && (t != 4 || short_ordinal_shape(S)))
    return RepType::Finite;

  if (t == 1 && dim <= 3) {
    bool ok = dim < 3 ? equals(rho, Rat(3)) : true;
    for (int s = 0; ok && s < S.size(); ++s)
      if (S.dim(s) == 3) ok = S.incomparables(s) == 0 && rho_poset(S.base(), cap) <= 3;
    if (ok) return RepType::Tame;
  }
  if (t >= 2 && t <= 5 && dim <= 2 && equals(rho, bound) && (t != 5 || short_ordinal_shape(S)))
    return RepType::Tame;
  return RepType::Wild;
}

bool dyadic_marked_finite(const DyadicSet& D, int t, const DyadicOptions& opt) {
  if (t < 0) throw InputError("negative t");
  if (D.edges().empty()) return eqposet_marked_type(D.inner().tilde(), t, opt.cap) == RepType::Finite;
  if (t == 0) return classify_dyadic(D, opt).finite;
  if (t != 1) return false;
  if (!below(rho_hat(D.inner(), opt.cap), Rat(3))) return false;
  auto shapes = edge_shortness(D, opt.order);
  for (const auto& sh : shapes) {
    if (!sh.is_short) return false;
    if (equipment(D, sh.edge).eq != 0) return false;
  }
  auto pred = D.inner().one_chain_pred();
  for (const auto& e : D.edges())
    for (const auto& X : bordering_sets(D, e)) {
      if (X.z_minus == 0 || X.z_plus == 0) continue;
      if (weight_of(D.p(), X.z_minus, pred) != ExtNat(1)) return false;
      if (weight_of(D.p(), X.z_plus, pred) != ExtNat(1)) return false;
    }
  return true;
}

RepType classify_eqposet_marked(const MarkedQuiver& Q, int x) {
  const Marking& m = Q.marks.at(x);
  if (m.kind != Marking::Kind::EqPoset && m.kind != Marking::Kind::Semilinear)
    throw InputError("vertex is not marked by a poset with equivalence");
  Lemma13Shape shape;
  try {
    shape = lemma13_shape(Q, x);
  } catch (const ShapeViolation&) {
    return RepType::Wild;
  }
  const EquivPoset S = shape.x_is_head ? m.eqposet : dual_eqposet(m.eqposet);
  return eqposet_marked_type(S, shape.t);
}

bool classify_dyadic_marked(const MarkedQuiver& Q, int x) {
  const Marking& m = Q.marks.at(x);
  if (m.kind != Marking::Kind::Dyadic) throw InputError("vertex is not marked by a dyadic set");
  Lemma13Shape shape;
  try {
    shape = lemma13_shape(Q, x);
  } catch (const ShapeViolation&) {
    return false;
  }
  const DyadicSet D = shape.x_is_head ? *m.dyadic : dual_dyadic(*m.dyadic);
  return dyadic_marked_finite(D, shape.t);
}

std::string to_string(const QuiverVerdict& v) {
  if (v.type) return to_string(*v.type);
  return v.finite ? "Finite" : "NotFinite";
}

QuiverVerdict classify(const MarkedQuiver& Q) {
  check_marks(Q);
  std::vector<int> special;
  for (int x = 0; x < Q.quiver.size(); ++x)
    if (!Q.marks[x].is_semilinear()) special.push_back(x);

  QuiverVerdict out;
  if (special.empty()) {
    out.route = "semilinear";
    out.type = classify_semilinear(Q);
    out.finite = *out.type == RepType::Finite;
    return out;
  }
  if (special.size() > 1) {
    out.route = "shape";
    out.type = RepType::Wild;
    out.note = "more than one vertex with a non-semilinear marking";
    return out;
  }
  const int x = special[0];
  const Marking& m = Q.marks[x];
  Lemma13Shape shape;
  try {
    shape = lemma13_shape(Q, x);
  } catch (const ShapeViolation& e) {
    out.route = "shape";
    out.note = e.what();
    if (m.kind == Marking::Kind::EqPoset) out.type = RepType::Wild;
    return out;
  }
  if (!shape.x_is_head)
    out.note = "marking dualized; an aggregate and its dual are assumed to share their type";
  if (m.kind == Marking::Kind::Dyadic && !m.dyadic->edges().empty()) {
    out.route = "dyadic";
    DyadicSet D = shape.x_is_head ? *m.dyadic : dual_dyadic(*m.dyadic);
    out.finite = dyadic_marked_finite(D, shape.t);
    if (out.finite) out.type = RepType::Finite;
    return out;
  }
  out.route = "eqposet";
  EquivPoset S = m.kind == Marking::Kind::Dyadic ? m.dyadic->inner().tilde() : m.eqposet;
  if (!shape.x_is_head) S = dual_eqposet(S);
  out.type = eqposet_marked_type(S, shape.t);
  out.finite = *out.type == RepType::Finite;
  return out;
}

}  // namespace reptype
