#include "reptype/separating.hpp"

#include <algorithm>
#include <functional>

namespace reptype {

Rat rho_point(const ExtNat& n) {
  if (n.is_inf()) return Rat(2);
  auto v = static_cast<long>(n.value());
  return rat(2 * v, v + 1);
}

Rat rho_tuple(const std::vector<ExtNat>& args) {
  Rat s = 0;
  for (const auto& a : args) s += rho_point(a);
  return s;
}

ExtNat mu3(ExtNat n1, ExtNat n2, ExtNat n3) {
  std::array<ExtNat, 3> a{n1, n2, n3};
  std::sort(a.begin(), a.end(), std::greater<>());
  if (a[0].is_inf()) return a[1] == ExtNat(0) ? ExtNat(4) : ExtNat::inf();
  return a[0] * a[1] + a[0] * a[2] + a[1] * a[2] + a[0] * a[1] * a[2];
}

static int side(int c) { return c < 0 ? -1 : (c == 0 ? 0 : 1); }

Lemma6Verdict lemma6_check(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw std::domain_error("lemma6_check needs n >= 1");
  Lemma6Verdict v;
  v.sides[0] = side(cmp(rho_tuple({n1, n2, n3}), Rat(4)));
  Rat inv = rat(1, static_cast<long>(n1 + 1)) + rat(1, static_cast<long>(n2 + 1)) +
            rat(1, static_cast<long>(n3 + 1));
  v.sides[1] = -side(cmp(inv, Rat(1)));  // >1 corresponds to rho < 4
  ExtNat m = mu3(n1 - 1, n2 - 1, n3 - 1);
  v.sides[2] = m < ExtNat(4) ? -1 : (m == ExtNat(4) ? 0 : 1);
  v.agree = v.sides[0] == v.sides[1] && v.sides[1] == v.sides[2];
  return v;
}

bool lemma6_agree(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
  return lemma6_check(n1, n2, n3).agree;
}

// Every entry adds at least 1, so t <= 4. The last entry is solved for
// exactly; earlier ones are enumerated in ascending order. For finite triples
// sum 1/(n_i+1) = 1 forces the two smaller entries to be at most 5, so the
// bound 64 on non-closing entries is generous.
std::set<std::vector<ExtNat>> solve_rho_eq4() {
  std::set<std::vector<ExtNat>> out;
  std::vector<ExtNat> cur;
  std::function<void(Rat)> rec = [&](Rat sum) {
    if (sum == 4) {
      std::vector<ExtNat> s = cur;
      std::sort(s.begin(), s.end(), std::greater<>());
      out.insert(s);
      return;
    }
    if (sum > 4 || cur.size() == 4) return;
    Rat gap = 4 - sum;
    // a single finite entry closing the gap exactly: 2n/(n+1) = gap -> n = gap/(2-gap)
    if (gap < 2) {
      Rat n = gap / (2 - gap);
      if (n.get_den() == 1 && n >= 1) {
        cur.push_back(ExtNat(n.get_num().get_ui()));
        rec(sum + gap);
        cur.pop_back();
      }
    }
    // otherwise the next entry leaves room for more; enumerate inf and small n
    cur.push_back(ExtNat::inf());
    if (gap >= 2) rec(sum + 2);
    cur.pop_back();
    for (std::uint64_t n = 1; n <= 64; ++n) {
      Rat r = rho_point(n);
      if (r >= gap) break;
      cur.push_back(n);
      rec(sum + r);
      cur.pop_back();
    }
  };
  rec(Rat(0));
  return out;
}

ExtNat triangle_group_order(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
  if (n1 < 2 || n2 < 2 || n3 < 2) throw std::domain_error("triangle group needs n >= 2");
  Rat r = rho_tuple({n1 - 1, n2 - 1, n3 - 1});
  if (r >= 4) return ExtNat::inf();
  Rat order = 8 / (4 - r);
  if (order.get_den() != 1) throw NonIntegral("order formula gave " + to_string(order));
  return ExtNat(order.get_num().get_ui());
}

}  // namespace reptype
