#include <doctest.h>

#include <random>

#include "reptype/dyadic.hpp"
#include "reptype/separating.hpp"

using namespace reptype;

namespace {

// a < b < a* < b* with (a,b) ~ (a*,b*)
BiequivPoset strip_pair() {
  return BiequivPoset(chain_poset(4), {{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{0, 1}, {2, 3}}});
}

// Chain 0 < 1 < ... < 2k-1 of big points, x_i paired with x_{k+i}, every pair of
// consecutive lower points an edge together with the pairs it forces.
std::vector<std::vector<PointPair>> chain_classes(int k) {
  std::vector<std::vector<PointPair>> c;
  for (int i = 0; i < k; ++i) c.push_back({{i, i}, {k + i, k + i}});
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) c.push_back({{i, j}, {k + i, k + j}});
  return c;
}

Poset with_extra(int n, std::vector<std::pair<int, int>> covers) { return make_poset(n, covers); }

const ExtRat kFour{false, Rat(4)};

}  // namespace

TEST_CASE("biequivalence axioms") {
  CHECK_FALSE(validate_biequivalence(BiequivPoset::trivial(n_hat())));
  EquivPoset E(chain_poset(3), {{0, 2}});
  CHECK_FALSE(validate_biequivalence(BiequivPoset::lift(E)));
  CHECK_FALSE(validate_biequivalence(strip_pair()));

  Poset V = make_poset(3, {{0, 1}, {0, 2}});
  try {
    BiequivPoset bad(V, {{{0, 1}, {0, 2}}});
    FAIL("expected an axiom violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom == "i");
  }
  // the interpolating point is missing on the other side
  CHECK_THROWS_AS(BiequivPoset(make_poset(5, {{0, 1}, {1, 2}, {3, 4}}),
                               {{{0, 0}, {3, 3}}, {{2, 2}, {4, 4}}, {{0, 2}, {3, 4}}}),
                  AxiomViolation);
  CHECK_THROWS_AS(BiequivPoset(V, {{{1, 0}}}), InputError);
}

TEST_CASE("rank and relation tags") {
  auto T = BiequivPoset::trivial(chain_poset(3));
  CHECK(T.rank(0, 2) == 1);
  CHECK(relation(T, 0, 2) == PairRelation::Triangle);
  CHECK(relation(T, 2, 0) == PairRelation::Above);
  CHECK_THROWS_AS(T.rank(2, 0), NotComparable);

  auto B = strip_pair();
  CHECK(B.rank(0, 1) == 2);
  CHECK(relation(B, 0, 1) == PairRelation::DoubleArrow);
  CHECK(relation(B, 0, 2) == PairRelation::Triangle);
  CHECK(relation(B, 0, 0) == PairRelation::DoubleArrow);
  CHECK(relation(BiequivPoset::trivial(n_hat()), 0, 2) == PairRelation::Incomparable);
  CHECK(B.one_chain(bit(0) | bit(2)));
  CHECK_FALSE(B.one_chain(bit(0) | bit(1)));
}

TEST_CASE("triangle closes under the order on random valid sets") {
  std::mt19937 rng(7);
  int checked = 0;
  for_each_dyadic_set(5, [&](const DyadicSet& D) {
    if (rng() % 4) return;
    ++checked;
    const auto& B = D.inner();
    const Poset& S = B.base();
    for (int a = 0; a < D.size(); ++a)
      for (int b = 0; b < D.size(); ++b)
        for (int c = 0; c < D.size(); ++c) {
          if (!S.le(a, b) || !S.le(b, c) || a == c) continue;
          bool left = relation(B, a, b) == PairRelation::Triangle;
          bool right = relation(B, b, c) == PairRelation::Triangle;
          if (left || right) REQUIRE(relation(B, a, c) == PairRelation::Triangle);
        }
  });
  CHECK(checked > 100);
}

TEST_CASE("transitivity of the biequivalence") {
  CHECK(is_transitive_biequiv(BiequivPoset::trivial(n_hat())));
  CHECK(is_transitive_biequiv(BiequivPoset::lift(EquivPoset(chain_poset(4), {{0, 3}, {1, 2}}))));
  CHECK(is_transitive_biequiv(BiequivPoset(chain_poset(6), chain_classes(3))));
  // (0,1) ~ (3,4) and (1,2) ~ (4,5) but (0,2) stays alone
  BiequivPoset W(make_poset(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}),
                 {{{0, 0}, {3, 3}}, {{1, 1}, {4, 4}}, {{2, 2}, {5, 5}}, {{0, 1}, {3, 4}},
                  {{1, 2}, {4, 5}}});
  CHECK_FALSE(is_transitive_biequiv(W));
}

TEST_CASE("p hat") {
  auto T = BiequivPoset::trivial(n_hat());
  CHECK(p_hat(T) == p_tilde(T.tilde()));
  CHECK(p_hat(strip_pair()) == std::vector<ExtNat>(4, ExtNat(2)));
  // worked example: big points that are not conormal get infinity
  auto ex = worked_example_eqposet();
  auto p = p_hat(BiequivPoset::lift(ex.set));
  CHECK(p[ex.x].is_inf());
  CHECK(p[ex.xs] == ExtNat(3));
  CHECK(p[ex.ys] == ExtNat(6));
}

TEST_CASE("necessary conditions") {
  CHECK(prop6_necessary(BiequivPoset::trivial(chain_poset(1))));
  CHECK(prop6_necessary(strip_pair()));
  // three pairwise incomparable big points whose partners sit on top
  Poset P = make_poset(6, {{0, 3}, {1, 4}, {2, 5}});
  BiequivPoset N8(P, {{{0, 0}, {3, 3}}, {{1, 1}, {4, 4}}, {{2, 2}, {5, 5}}});
  auto r = prop6_report(N8);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.rho < ExtRat{false, Rat(6)});
}

TEST_CASE("edges and duals") {
  CHECK(DyadicSet(BiequivPoset::trivial(n_hat())).edges().empty());
  DyadicSet D(strip_pair());
  REQUIRE(D.edges().size() == 2);
  CHECK(D.edges()[0] == Edge{0, 1});
  CHECK(D.dual(Edge{0, 1}) == Edge{2, 3});
  CHECK(D.dual(Edge{2, 3}) == Edge{0, 1});
  for (const auto& e : D.edges()) CHECK(e.y != D.star(e.x));
  CHECK_THROWS_AS(DyadicSet(BiequivPoset::lift(EquivPoset(n_hat(), {{0, 2}}))), NotDyadic);
  CHECK_THROWS_AS(DyadicSet(BiequivPoset::lift(EquivPoset(chain_poset(3), {{0, 1, 2}}))),
                  NotDyadic);
}

TEST_CASE("short, long and maximal edges") {
  DyadicSet one(strip_pair());
  auto s1 = edge_shortness(one);
  CHECK(s1[0].is_short);
  CHECK(s1[0].is_maximal);

  DyadicSet D(BiequivPoset(chain_poset(6), chain_classes(3)));
  auto sh = edge_shortness(D);
  REQUIRE(sh.size() == 6);
  for (const auto& s : sh) {
    bool wide = s.edge.y - s.edge.x == 2;
    CHECK(s.is_short == !wide);
    CHECK(s.is_long == wide);
    CHECK(s.is_maximal == wide);
  }
  CHECK(strips(D) == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  // the literal order makes consecutive strip edges comparable
  auto lit = edge_shortness(D, EdgeOrder::Literal);
  auto find = [&](Edge e) {
    for (const auto& s : lit)
      if (s.edge == e) return s;
    return EdgeShape{};
  };
  CHECK_FALSE(find({0, 1}).is_short);
}

TEST_CASE("strips") {
  CHECK(strips(DyadicSet(strip_pair())) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(strips(DyadicSet(BiequivPoset::trivial(n_hat()))).empty());
  // big points without edges are isolated strips
  DyadicSet iso(BiequivPoset::lift(EquivPoset(chain_poset(3), {{0, 2}})));
  CHECK(strips(iso) == std::vector<std::vector<int>>{{0}, {2}});
}

namespace {

// a b a* b* x y: the small x sits beside the edge (a,b), the small y lies
// above a and beside b.
DyadicSet bordered_example() {
  Poset P = with_extra(6, {{0, 1}, {1, 2}, {2, 3}, {4, 2}, {0, 5}, {5, 2}});
  return DyadicSet(BiequivPoset(P, {{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{0, 1}, {2, 3}}}));
}

}  // namespace

TEST_CASE("equipment and bordering sets") {
  DyadicSet D(strip_pair());
  auto c = equipment(D, {0, 1});
  CHECK(c.eq == 0);
  CHECK(c.eq_value == ExtNat(0));
  CHECK(c.l == 0);
  auto X = bordering_sets(D, {0, 1});
  REQUIRE(X.size() == 1);
  CHECK(mu_sigma(D, {0, 1}, X[0]) == ExtNat(0));

  DyadicSet E = bordered_example();
  auto ce = equipment(E, {0, 1});
  CHECK(ce.eq == bit(4));
  CHECK(ce.eq_minus == (bit(4) | bit(5)));
  CHECK(ce.eq_plus == bit(4));
  CHECK(equipment(E, {2, 3}).eq_value == ExtNat(0));
  bool seen = false;
  for (const auto& b : bordering_sets(E, {0, 1})) {
    CHECK((b.z_e & (b.z_minus | b.z_plus)) == 0);
    if (b.z_e == bit(4) && b.z_minus == bit(5) && b.z_plus == 0) {
      seen = true;
      auto m = mu_breakdown(E, {0, 1}, b);
      CHECK(m.eq == ExtNat(1));
      CHECK(m.eq_dual == ExtNat(0));
      CHECK(m.eq_star == ExtNat(1));
      CHECK(m.l == 0);
      CHECK(m.mu == ExtNat(1));
    }
  }
  CHECK(seen);
  CHECK(mu3(1, 1, 0) == ExtNat(1));

  // l = 2 leaves only the Ze part
  DyadicSet L(BiequivPoset(chain_poset(8), chain_classes(4)));
  auto cl = equipment(L, {0, 3});
  CHECK(cl.l == 2);
  for (const auto& b : bordering_sets(L, {0, 3})) CHECK((b.z_minus | b.z_plus) == 0);
}

TEST_CASE("unbounded dual equipment forces mu >= 4") {
  // two incomparable small points above b beside a* and b*
  Poset P = with_extra(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}});
  DyadicSet D(BiequivPoset(P, {{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{0, 1}, {2, 3}}}));
  CHECK(equipment(D, {2, 3}).eq_value.is_inf());
  for (const auto& X : bordering_sets(D, {0, 1})) CHECK_FALSE(mu_sigma(D, {0, 1}, X) < ExtNat(4));
  CHECK_FALSE(linearly_equipped(D));
  CHECK_FALSE(classify_dyadic(D).finite);
}

TEST_CASE("mu = 4 catalog") {
  auto cases = enumerate_muEq4_cases();
  REQUIRE(cases.size() == 17);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CHECK(cases[i].number == static_cast<int>(i) + 1);
    for (const auto& t : cases[i].tuples) {
      auto u = [](int v) { return ExtNat(static_cast<std::uint64_t>(v)); };
      CHECK(mu3(u(t.eq), u(t.eq_dual + t.eq_minus + t.eq_plus), u(t.l)) == ExtNat(4));
      CHECK(t.eq_minus >= t.eq_plus);
    }
  }
  auto has = [&](MuEq4Tuple t) {
    for (const auto& c : cases)
      for (const auto& u : c.tuples)
        if (u == t) return true;
    return false;
  };
  CHECK(has({1, 1, 1, 0, 0}));
  CHECK(has({4, 1, 0, 0, 0}));
  // the systematic scan has one tuple more than the numbered list
  CHECK(muEq4_unlisted() == std::vector<MuEq4Tuple>{{0, 1, 0, 2, 2}});
  CHECK(enumerate_muEq4_tuples().size() == 22);
}

namespace {

// a<b<a*<b*, a 4-chain beside (a,b) and below a*, and y above a beside b
DyadicSet case10_example() {
  Poset P = with_extra(9, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 2}, {0, 8}, {8, 2}});
  return DyadicSet(BiequivPoset(P, {{{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{0, 1}, {2, 3}}}));
}

// a<m<b<a*<m*<b* with all edges, a 3-chain beside the strip below a*, and z
// below m beside a
DyadicSet condition_b_example() {
  auto classes = chain_classes(3);
  Poset P = with_extra(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {8, 3}, {9, 1}});
  return DyadicSet(BiequivPoset(P, classes));
}

// a<m<b<a*<m*<b* with all edges, x beside a, m, b below a*, y above b beside
// a*, m*, b*, and x < y
DyadicSet case14_example() {
  Poset P = with_extra(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 3}, {2, 7}, {6, 7}});
  return DyadicSet(BiequivPoset(P, chain_classes(3)));
}

}  // namespace

TEST_CASE("classification") {
  auto v = classify_dyadic(DyadicSet(strip_pair()));
  CHECK(v.finite);
  CHECK(rho_eqposet(strip_pair().tilde()) == ExtRat{false, Rat(16, 9)});

  auto c10 = classify_dyadic(case10_example());
  CHECK_FALSE(c10.finite);
  CHECK(c10.reason.rfind("condition A", 0) == 0);
  CHECK(c10.mu_case == std::optional<int>(10));

  auto cb = condition_b_example();
  CHECK(rho_eqposet(cb.inner().tilde()) < kFour);
  auto vb = classify_dyadic(cb);
  CHECK_FALSE(vb.finite);
  CHECK(vb.reason.rfind("condition B", 0) == 0);

  auto c14 = classify_dyadic(case14_example());
  CHECK_FALSE(c14.finite);
  CHECK(c14.mu_case == std::optional<int>(14));
}

TEST_CASE("splitting into independent parts") {
  // strip pair with a small point beside it, stacked twice
  Poset lower = with_extra(5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}});
  Poset P = ordinal_sum(lower, lower);
  std::vector<std::vector<PointPair>> classes;
  for (int off : {0, 5})
    for (auto c : std::vector<std::vector<PointPair>>{
             {{0, 0}, {2, 2}}, {{1, 1}, {3, 3}}, {{0, 1}, {2, 3}}}) {
      for (auto& [s, t] : c) s += off, t += off;
      classes.push_back(c);
    }
  BiequivPoset B(P, classes);
  auto sp = split_components(B);
  REQUIRE(sp);
  CHECK(sp->first == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(sp->second == std::vector<int>{5, 6, 7, 8, 9});
  CHECK_FALSE(split_components(BiequivPoset::trivial(n_hat())));
  CHECK_FALSE(split_components(strip_pair()));
}

TEST_CASE("classification is componentwise on splittable sets") {
  int split = 0;
  for (int n = 2; n <= 5; ++n)
    for_each_dyadic_set(n, [&](const DyadicSet& D) {
      auto sp = split_components(D.inner());
      if (!sp) return;
      ++split;
      bool whole = classify_dyadic(D).finite;
      bool parts = classify_dyadic(DyadicSet(D.inner().induced(sp->first))).finite &&
                   classify_dyadic(DyadicSet(D.inner().induced(sp->second))).finite;
      REQUIRE(whole == parts);
    });
  CHECK(split > 0);
}

TEST_CASE("criticality") {
  CHECK(is_critical_dyadic(case14_example()));
  CHECK_FALSE(is_critical_dyadic(DyadicSet(strip_pair())));
  CHECK_THROWS_AS(is_critical_dyadic(DyadicSet(BiequivPoset::trivial(chain_poset(9)))),
                  CapExceeded);
}

TEST_CASE("structure facts on all dyadic sets up to five points") {
  for (int n = 1; n <= 5; ++n)
    for_each_dyadic_set(n, [&](const DyadicSet& D) {
      REQUIRE(dual_comparability_holds(D));
      REQUIRE(equipment_implications_hold(D));
      REQUIRE(short_edges_form_strips(D));
      // p hat agrees with p tilde wherever it is finite, so rho can only grow
      auto ph = D.p();
      auto pt = p_tilde(D.inner().tilde());
      for (int s = 0; s < D.size(); ++s)
        if (!ph[s].is_inf()) REQUIRE(pt[s] == ph[s]);
      REQUIRE_FALSE(rho_hat(D.inner()) < rho_eqposet(D.inner().tilde()));
      if (classify_dyadic(D).finite) REQUIRE(prop6_necessary(D.inner()));
    });
}
