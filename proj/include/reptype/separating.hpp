#pragma once

#include <array>
#include <set>
#include <vector>

#include "reptype/arith.hpp"

namespace reptype {

// rho(n) = 2n/(n+1), rho(inf) = 2, rho(0) = 0
Rat rho_point(const ExtNat& n);
Rat rho_tuple(const std::vector<ExtNat>& args);

// n1 n2 + n1 n3 + n2 n3 + n1 n2 n3 with mu(inf,0,0) = 4 and inf otherwise
ExtNat mu3(ExtNat n1, ExtNat n2, ExtNat n3);

struct Lemma6Verdict {
  bool agree = false;
  // -1 strict (<4, >1, <4), 0 equality case, 1 neither; per predicate
  std::array<int, 3> sides{};
};
Lemma6Verdict lemma6_check(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);
bool lemma6_agree(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);

// Multisets sorted in descending order.
std::set<std::vector<ExtNat>> solve_rho_eq4();

struct NonIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Order of <a,b,c | a^2, b^2, c^2, (ab)^n1, (bc)^n2, (ca)^n3> read as 8/(4 - rho(n-1)).
ExtNat triangle_group_order(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);

}  // namespace reptype
