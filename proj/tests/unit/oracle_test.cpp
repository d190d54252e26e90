#include <doctest.h>

#include <cmath>
#include <random>

#include "reptype/oracle.hpp"

using namespace reptype;

namespace {

Relation order_relation(int n) {
  Relation R(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) R.set(i, j);
  return R;
}

bool all_f_one(const LabeledGraph& G) {
  for (const auto& E : G.edges())
    if (!E.f.is_one()) return false;
  return true;
}

}  // namespace

TEST_CASE("numeric norm on closed forms") {
  CHECK(numeric_norm(order_relation(3)).value == doctest::Approx(2.0 / 3).epsilon(1e-9));
  CHECK(numeric_norm(Relation::complete(4)).value == doctest::Approx(1.0));
  CHECK(numeric_norm(Relation::identity(4)).value == doctest::Approx(0.25));
  auto r = numeric_norm(order_relation(2), 5);
  CHECK(r.residual == doctest::Approx(1.0 / 32));
  CHECK(r.iterations > 0);
  CHECK_THROWS_AS(numeric_norm(Relation::identity(9)), CapExceeded);
}

TEST_CASE("numeric norm agrees with the exact norm") {
  std::mt19937 rng(17);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 6;
    Relation R = Relation::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && coin(rng)) R.set(i, j);
    double exact = norm(R).value.get_d();
    double approx = numeric_norm(R).value;
    CHECK(approx >= exact - 1e-12);
    CHECK(std::abs(approx - exact) <= 1e-6);
  }
}

TEST_CASE("poset counts up to isomorphism") {
  const int connected[] = {1, 1, 3, 10, 44, 238};
  const int all[] = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_connected_posets(n).size() == static_cast<std::size_t>(connected[n - 1]));
    CHECK(enumerate_all_posets(n).size() == static_cast<std::size_t>(all[n - 1]));
  }
  CHECK_THROWS_AS(enumerate_all_posets(8), CapExceeded);
}

TEST_CASE("backtracking isomorphism matches canonical forms") {
  auto list = enumerate_all_posets(4);
  for (const auto& a : list)
    for (const auto& b : list) CHECK(posets_isomorphic(a, b) == isomorphic(a, b));
  Poset p = make_poset(3, {{0, 1}});
  Poset q = make_poset(3, {{2, 0}});
  CHECK(posets_isomorphic(p, q));
}

TEST_CASE("exclusion classifier") {
  CHECK(exclusion_classify(primitive_poset({2, 2, 2})) == RepType::Tame);
  CHECK(exclusion_classify(chain_poset(9)) == RepType::Finite);
  CHECK(exclusion_classify(primitive_poset({1, 1, 1, 2})) == RepType::Wild);
  CHECK(exclusion_classify(primitive_poset({1, 1, 1, 1})) == RepType::Tame);
  CHECK(exclusion_classify(primitive_poset({1, 1, 1, 1, 1})) == RepType::Wild);
  for (int n = 1; n <= 6; ++n)
    for (const auto& P : enumerate_all_posets(n)) CHECK(exclusion_classify(P) == classify_poset(P));
}

TEST_CASE("Tits form on the catalog") {
  for (const auto& e : catalog(CatalogList::I, 9))
    if (all_f_one(e.graph) && e.graph.all_v_one()) CHECK_MESSAGE(tits_form_type(e.graph) == RepType::Finite, e.name);
  for (const auto& e : catalog(CatalogList::II, 9))
    if (all_f_one(e.graph) && e.graph.all_v_one()) CHECK_MESSAGE(tits_form_type(e.graph) == RepType::Tame, e.name);
  LabeledGraph two_loops(1);
  two_loops.add_edge(0, 0);
  two_loops.add_edge(0, 0);
  CHECK(tits_form_type(two_loops) == RepType::Wild);
  LabeledGraph triple(2);
  for (int k = 0; k < 3; ++k) triple.add_edge(0, 1);
  CHECK(tits_form_type(triple) == RepType::Wild);
}

TEST_CASE("Tits form agrees with integral classification on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& G : enumerate_connected_graphs(n)) {
      auto k = classify_integral_fgraph(G).kind;
      RepType expected = k == GraphClass::Kind::Dynkin           ? RepType::Finite
                         : k == GraphClass::Kind::ExtendedDynkin ? RepType::Tame
                                                                 : RepType::Wild;
      CHECK(tits_form_type(G) == expected);
    }
}

TEST_CASE("graph and tree counts") {
  const int graphs[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_connected_graphs(n).size() == static_cast<std::size_t>(graphs[n - 1]));
  const int trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n)
    CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(trees[n - 1]));
  CHECK_THROWS_AS(enumerate_connected_graphs(8), CapExceeded);
}
