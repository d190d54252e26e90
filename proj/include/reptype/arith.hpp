#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace reptype {

// Always canonical: every constructor path below calls canonicalize().
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
std::string to_decimal(const Rat& r, int digits = 6);
double to_double(const Rat& r);

std::strong_ordering rat_cmp(const Rat& a, const Rat& b);

class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(std::uint64_t n) : n_(n) {}  // NOLINT: implicit from integers is intended
  static ExtNat inf() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  std::uint64_t value() const;

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  // inf - n = inf; finite underflow and n - inf throw.
  friend ExtNat operator-(const ExtNat& a, const ExtNat& b);
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b);  // 0*inf = 0
  friend bool operator==(const ExtNat& a, const ExtNat& b) = default;
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

 private:
  std::uint64_t n_ = 0;
  bool inf_ = false;
};

ExtNat max(const ExtNat& a, const ExtNat& b);
std::string to_string(const ExtNat& e);
ExtNat parse_extnat(const std::string& s);

// a + b*sqrt(5)
struct QuadRat {
  Rat a{0};
  Rat b{0};

  QuadRat() = default;
  QuadRat(Rat x) : a(std::move(x)) {}  // NOLINT
  QuadRat(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

  int sign() const;
  bool is_rational() const { return b == 0; }

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a == y.a && x.b == y.b; }
};

std::strong_ordering rat_cmp(const QuadRat& a, const Rat& b);
std::string to_string(const QuadRat& q);
double to_double(const QuadRat& q);

// A certified rational enclosure [lo, hi] of cos(pi/p), p >= 7.
struct Enclosure {
  Rat lo, hi;
};

class CosEncloser {
 public:
  explicit CosEncloser(std::uint64_t p);
  const Enclosure& cos_bounds() const { return e_; }
  // Bounds on 4cos^2(pi/p); valid because both bounds stay positive.
  Enclosure hat_bounds() const;
  void refine();  // halves the enclosure width
  int steps() const { return steps_; }

 private:
  bool above_root(const Rat& q) const;  // q > cos(pi/p)
  std::uint64_t p_;
  Enclosure e_;
  int steps_ = 0;
};

inline constexpr int kRefineCap = 128;

struct RefinementCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 4cos^2(pi/f) for a Coxeter label f.
struct HatValue {
  struct CosSq {
    std::uint64_t p;
  };
  std::variant<QuadRat, CosSq> v;

  static HatValue exact(QuadRat q) { return HatValue{std::move(q)}; }
  static HatValue cos_sq(std::uint64_t p) { return HatValue{CosSq{p}}; }
  bool is_exact() const { return std::holds_alternative<QuadRat>(v); }
  // true iff the value is exactly the rational r
  bool equals(const Rat& r) const;
};

// 3 -> 1, 4 -> 2, 5 -> (3+sqrt5)/2, 6 -> 3, p >= 7 -> CosSq(p), inf -> 4
HatValue hat_of_label(const ExtNat& f);

std::strong_ordering rat_cmp(const HatValue& a, const Rat& b);
std::string to_string(const HatValue& h);
double to_double(const HatValue& h);

// Real number of the form q + sum c_i * 4cos^2(pi/p_i), closed under + and
// rational scaling. Used for hat-weighted degrees.
struct RealSum {
  QuadRat exact;
  std::vector<std::pair<Rat, std::uint64_t>> cos_terms;

  RealSum() = default;
  RealSum(Rat r) : exact(std::move(r)) {}  // NOLINT
  RealSum(QuadRat q) : exact(std::move(q)) {}  // NOLINT
  static RealSum of(const HatValue& h);

  RealSum& operator+=(const RealSum& o);
  friend RealSum operator+(RealSum a, const RealSum& b) { return a += b; }
  friend RealSum operator*(const Rat& c, RealSum a);
  bool is_rational() const { return cos_terms.empty() && exact.is_rational(); }
};

// Throws RefinementCapExceeded when kRefineCap halvings cannot separate.
std::strong_ordering rat_cmp(const RealSum& a, const Rat& b);
std::string to_string(const RealSum& s);
double to_double(const RealSum& s);

}  // namespace reptype
