#include "reptype/arith.hpp"

#include <cmath>
#include <sstream>

namespace reptype {

Rat rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_decimal(const Rat& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = r * scale;
  mpz_class num = scaled.get_num(), den = scaled.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  // round half up on the magnitude
  mpz_class q = (2 * num + den) / (2 * den);
  std::string digits_str = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(digits_str.size()) <= digits)
      digits_str.insert(0, digits + 1 - digits_str.size(), '0');
    digits_str.insert(digits_str.size() - digits, ".");
  }
  return (neg && q != 0 ? "-" : "") + digits_str;
}

double to_double(const Rat& r) { return r.get_d(); }

std::strong_ordering rat_cmp(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

static std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---- ExtNat

std::uint64_t ExtNat::value() const {
  if (inf_) throw std::domain_error("value() of infinity");
  return n_;
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.inf_ || b.inf_) return ExtNat::inf();
  return ExtNat(a.n_ + b.n_);
}

ExtNat operator-(const ExtNat& a, const ExtNat& b) {
  if (a.inf_) return ExtNat::inf();
  if (b.inf_) throw std::domain_error("finite minus infinity");
  if (b.n_ > a.n_) throw std::domain_error("negative natural");
  return ExtNat(a.n_ - b.n_);
}

ExtNat operator*(const ExtNat& a, const ExtNat& b) {
  if ((!a.inf_ && a.n_ == 0) || (!b.inf_ && b.n_ == 0)) return ExtNat(0);
  if (a.inf_ || b.inf_) return ExtNat::inf();
  return ExtNat(a.n_ * b.n_);
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  return a.n_ <=> b.n_;
}

ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

std::string to_string(const ExtNat& e) { return e.is_inf() ? "inf" : std::to_string(e.value()); }

ExtNat parse_extnat(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return ExtNat::inf();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad extended natural: " + s);
  return ExtNat(std::stoull(s));
}

// ---- QuadRat

int QuadRat::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 5 b^2
  int c = cmp(a * a, 5 * b * b);
  if (c == 0) return 0;  // impossible for rationals, kept for totality
  return c > 0 ? sa : sb;
}

std::strong_ordering rat_cmp(const QuadRat& a, const Rat& b) {
  return from_sign((a - QuadRat(b)).sign());
}

std::string to_string(const QuadRat& q) {
  if (q.b == 0) return to_string(q.a);
  std::ostringstream os;
  if (q.a != 0) os << to_string(q.a) << (q.b > 0 ? " + " : " - ");
  else if (q.b < 0) os << "-";
  Rat mag = abs(q.b);
  if (mag != 1) os << to_string(mag) << "*";
  os << "sqrt5";
  return os.str();
}

double to_double(const QuadRat& q) { return q.a.get_d() + q.b.get_d() * std::sqrt(5.0); }

// ---- cos(pi/p) enclosure
//
// For q = cos(theta) with 0 < theta < 2pi/p, sin(p theta) = U_{p-1}(q) sin(theta),
// so sign U_{p-1}(q) > 0 iff theta < pi/p iff q > cos(pi/p). The starting
// bracket [1 - 128/(25 p^2), 1] sits inside (cos(2pi/p), 1] since pi < 16/5.

CosEncloser::CosEncloser(std::uint64_t p) : p_(p) {
  if (p < 7) throw std::domain_error("CosSq needs p >= 7");
  Rat pp(static_cast<unsigned long>(p));
  e_.lo = 1 - Rat(128) / (25 * pp * pp);
  e_.hi = 1;
}

bool CosEncloser::above_root(const Rat& q) const {
  Rat u_prev = 1, u = 2 * q;  // U_0, U_1
  for (std::uint64_t k = 1; k + 1 < p_; ++k) {
    Rat next = 2 * q * u - u_prev;
    u_prev = std::move(u);
    u = std::move(next);
  }
  return sgn(u) > 0;
}

void CosEncloser::refine() {
  Rat mid = (e_.lo + e_.hi) / 2;
  if (above_root(mid)) e_.hi = mid;
  else e_.lo = mid;
  ++steps_;
}

Enclosure CosEncloser::hat_bounds() const { return {4 * e_.lo * e_.lo, 4 * e_.hi * e_.hi}; }

// ---- HatValue

bool HatValue::equals(const Rat& r) const {
  if (auto q = std::get_if<QuadRat>(&v)) return q->b == 0 && q->a == r;
  return false;  // 4cos^2(pi/p) is irrational for p >= 7
}

HatValue hat_of_label(const ExtNat& f) {
  if (f.is_inf()) return HatValue::exact(QuadRat(Rat(4)));
  switch (f.value()) {
    case 3: return HatValue::exact(QuadRat(Rat(1)));
    case 4: return HatValue::exact(QuadRat(Rat(2)));
    case 5: return HatValue::exact(QuadRat(rat(3, 2), rat(1, 2)));
    case 6: return HatValue::exact(QuadRat(Rat(3)));
    default:
      if (f.value() < 3) throw std::domain_error("Coxeter label must be >= 3");
      return HatValue::cos_sq(f.value());
  }
}

std::strong_ordering rat_cmp(const HatValue& a, const Rat& b) {
  if (auto q = std::get_if<QuadRat>(&a.v)) return rat_cmp(*q, b);
  return rat_cmp(RealSum::of(a), b);
}

std::string to_string(const HatValue& h) {
  if (auto q = std::get_if<QuadRat>(&h.v)) return to_string(*q);
  return "4cos^2(pi/" + std::to_string(std::get<HatValue::CosSq>(h.v).p) + ")";
}

double to_double(const HatValue& h) {
  if (auto q = std::get_if<QuadRat>(&h.v)) return to_double(*q);
  double c = std::cos(M_PI / static_cast<double>(std::get<HatValue::CosSq>(h.v).p));
  return 4 * c * c;
}

// ---- RealSum

RealSum RealSum::of(const HatValue& h) {
  if (auto q = std::get_if<QuadRat>(&h.v)) return RealSum(*q);
  RealSum s;
  s.cos_terms.emplace_back(Rat(1), std::get<HatValue::CosSq>(h.v).p);
  return s;
}

RealSum& RealSum::operator+=(const RealSum& o) {
  exact = exact + o.exact;
  for (const auto& [c, p] : o.cos_terms) {
    bool merged = false;
    for (auto& [c2, p2] : cos_terms)
      if (p2 == p) {
        c2 += c;
        merged = true;
        break;
      }
    if (!merged) cos_terms.emplace_back(c, p);
  }
  std::erase_if(cos_terms, [](const auto& t) { return t.first == 0; });
  return *this;
}

RealSum operator*(const Rat& c, RealSum a) {
  a.exact = QuadRat(c) * a.exact;
  for (auto& t : a.cos_terms) t.first *= c;
  std::erase_if(a.cos_terms, [](const auto& t) { return t.first == 0; });
  return a;
}

std::strong_ordering rat_cmp(const RealSum& s, const Rat& b) {
  if (s.cos_terms.empty()) return rat_cmp(s.exact, b);
  // Enclose sqrt5 and each cosine term, halving until the interval clears b.
  Rat r_lo = 2, r_hi = 3;  // sqrt5 bracket
  std::vector<CosEncloser> enc;
  for (const auto& t : s.cos_terms) enc.emplace_back(t.second);
  for (int step = 0; step <= kRefineCap; ++step) {
    Rat lo = s.exact.a - b, hi = s.exact.a - b;
    if (s.exact.b > 0) {
      lo += s.exact.b * r_lo;
      hi += s.exact.b * r_hi;
    } else {
      lo += s.exact.b * r_hi;
      hi += s.exact.b * r_lo;
    }
    for (std::size_t i = 0; i < enc.size(); ++i) {
      const Rat& c = s.cos_terms[i].first;
      Enclosure h = enc[i].hat_bounds();
      if (c > 0) {
        lo += c * h.lo;
        hi += c * h.hi;
      } else {
        lo += c * h.hi;
        hi += c * h.lo;
      }
    }
    if (lo > 0) return std::strong_ordering::greater;
    if (hi < 0) return std::strong_ordering::less;
    Rat mid = (r_lo + r_hi) / 2;
    if (mid * mid > 5) r_hi = mid;
    else r_lo = mid;
    for (auto& e : enc) e.refine();
  }
  throw RefinementCapExceeded("comparison not separated after " + std::to_string(kRefineCap) +
                              " refinements");
}

std::string to_string(const RealSum& s) {
  std::string out = to_string(s.exact);
  for (const auto& [c, p] : s.cos_terms)
    out += " + " + (c == 1 ? std::string() : to_string(c) + "*") + "4cos^2(pi/" +
           std::to_string(p) + ")";
  return out;
}

double to_double(const RealSum& s) {
  double d = to_double(s.exact);
  for (const auto& [c, p] : s.cos_terms) {
    double x = std::cos(M_PI / static_cast<double>(p));
    d += c.get_d() * 4 * x * x;
  }
  return d;
}

}  // namespace reptype
