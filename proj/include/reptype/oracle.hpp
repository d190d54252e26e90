#pragma once

#include <cstdint>
#include <vector>

#include "reptype/graphs.hpp"
#include "reptype/poset.hpp"
#include "reptype/relation.hpp"

namespace reptype {

// Independent brute-force and floating-point oracles. None of them feeds a
// production verdict; the test suite compares them with the exact engines.

struct NumericResult {
  double value = 0;          // f_R at the best probe, an upper bound on the norm
  std::uint64_t iterations = 0;  // probes evaluated
  double residual = 0;       // final step size of the refinement
};

inline constexpr int kNumericMaxN = 8;
// Probes every face barycenter, then refines each by pairwise mass transfers
// with the step halving once per depth level, down to 2^-depth.
NumericResult numeric_norm(const Relation& R, int depth = 12);

inline constexpr int kOracleEnumCap = 7;
// One representative per isomorphism class, grown by adding a minimal point
// below an up-set and deduplicated by backtracking isomorphism.
std::vector<Poset> enumerate_connected_posets(int n);
std::vector<Poset> enumerate_all_posets(int n);
bool posets_isomorphic(const Poset& a, const Poset& b);

inline constexpr int kExclusionCap = 16;
// Finite iff no K_i embeds, Tame iff some K_i and no N_j, Wild iff some N_j.
RepType exclusion_classify(const Poset& S);

// Tits form of a plain quiver: q(x) = sum x_i^2 - sum over arrows x_t x_h.
// Positive definite -> Finite, positive semidefinite -> Tame, otherwise Wild.
// Needs f = 1 and v = 1; loops and parallel edges allowed.
RepType tits_form_type(const LabeledGraph& G);

// Connected simple graphs on n vertices up to isomorphism (n <= 7), and
// trees on n vertices (n <= 12).
std::vector<LabeledGraph> enumerate_connected_graphs(int n);
std::vector<LabeledGraph> enumerate_trees(int n);

}  // namespace reptype
