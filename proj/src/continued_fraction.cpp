#include "shannon/continued_fraction.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "shannon/error.hpp"

namespace shannon {

namespace mp = boost::multiprecision;

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

BigInt isqrt(const BigInt& n) { return mp::sqrt(n); }

// Sign of (l + s * sqrt(m)) with s in {-1, 0, 1} and m >= 0.
int sign_with_sqrt(const BigInt& l, int s, const BigInt& m) {
  if (s == 0 || m == 0) return l > 0 ? 1 : (l < 0 ? -1 : 0);
  int sl = l > 0 ? 1 : (l < 0 ? -1 : 0);
  if (sl == 0) return s;
  if (sl == s) return s;
  // Opposite signs: compare l^2 with m.
  BigInt l2 = l * l;
  if (l2 == m) return 0;
  return l2 > m ? sl : s;
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  if (c_ == 0) throw InputError("quadratic surd with zero denominator");
  if (d_ < 0) throw InputError("quadratic surd with negative radicand");
  normalize();
}

void QuadraticSurd::normalize() {
  if (b_ != 0 && d_ != 0) {
    BigInt r = isqrt(d_);
    if (r * r == d_) {
      a_ += b_ * r;
      b_ = 0;
    }
  }
  if (d_ == 0) b_ = 0;
  if (b_ == 0) d_ = 0;
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  BigInt g = mp::gcd(mp::gcd(mp::abs(a_), mp::abs(b_)), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& r) {
  return QuadraticSurd(mp::numerator(r), 0, 0, mp::denominator(r));
}

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
  std::vector<BigInt> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur == "-" || cur == "+") throw InputError("malformed surd '" + std::string(text) + "'");
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(cur[i])) && !(i == 0 && (cur[i] == '-' || cur[i] == '+')))
        throw InputError("malformed surd '" + std::string(text) + "'");
    bool neg = cur[0] == '-';
    std::string_view digits(cur);
    if (cur[0] == '-' || cur[0] == '+') digits.remove_prefix(1);
    BigInt v = decimal_bigint(digits);
    parts.push_back(neg ? BigInt(-v) : v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  flush();
  if (parts.size() != 4) throw InputError("surd needs four integers A,B,D,C: '" + std::string(text) + "'");
  return QuadraticSurd(parts[0], parts[1], parts[2], parts[3]);
}

BigInt QuadraticSurd::floor() const {
  // floor((a + y)/c) = floor(floor(a + y)/c) for integer c > 0.
  if (b_ == 0) return floor_div(a_, c_);
  BigInt n = b_ * b_ * d_;
  BigInt r = isqrt(n);
  bool exact = r * r == n;
  BigInt whole = b_ > 0 ? BigInt(a_ + r) : BigInt(a_ - r - (exact ? 0 : 1));
  return floor_div(whole, c_);
}

BigInt QuadraticSurd::ceil() const {
  BigInt f = floor();
  return compare(Rational(f)) == 0 ? f : f + 1;
}

int QuadraticSurd::compare(const Rational& r) const {
  const BigInt& u = mp::numerator(r);
  const BigInt& v = mp::denominator(r);
  // sign((a + b sqrt d)/c - u/v) = sign(a v - u c + b v sqrt d), c, v > 0.
  BigInt l = a_ * v - u * c_;
  int s = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
  BigInt bv = b_ * v;
  return sign_with_sqrt(l, s, bv * bv * d_);
}

long double QuadraticSurd::approx() const {
  long double val = static_cast<long double>(a_) + static_cast<long double>(b_) * std::sqrt(static_cast<long double>(d_));
  return val / static_cast<long double>(c_);
}

QuadraticSurd QuadraticSurd::next_complete_quotient() const {
  BigInt shifted = a_ - floor() * c_;
  if (b_ == 0 && shifted == 0) throw PrecisionError("continued fraction of " + str() + " terminated");
  // c / (shifted + b sqrt d) = c (shifted - b sqrt d) / (shifted^2 - b^2 d)
  BigInt denom = shifted * shifted - b_ * b_ * d_;
  return QuadraticSurd(c_ * shifted, -c_ * b_, d_, denom);
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
    if (c_ != 1) os << "/" << c_;
    return os.str();
  }
  os << "(" << a_ << (b_ < 0 ? "-" : "+") << mp::abs(b_) << "*sqrt(" << d_ << "))/" << c_;
  return os.str();
}

DecimalReal DecimalReal::parse(std::string_view text) {
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw InputError("malformed decimal '" + std::string(text) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("malformed decimal '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw InputError("malformed decimal '" + std::string(text) + "'");
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac_digits));
  Rational mid(decimal_bigint(digits), scale);
  Rational ulp(BigInt(1), scale);
  return DecimalReal{mid - ulp, mid + ulp, std::string(text)};
}

std::string describe(const RealDescriptor& r) {
  if (const auto* s = std::get_if<QuadraticSurd>(&r)) return s->str();
  return std::get<DecimalReal>(r).text;
}

int compare(const RealDescriptor& r, const Rational& x) {
  if (const auto* s = std::get_if<QuadraticSurd>(&r)) return s->compare(x);
  const auto& dec = std::get<DecimalReal>(r);
  if (dec.lo > x) return 1;
  if (dec.hi < x) return -1;
  throw PrecisionError("decimal " + dec.text + " does not decide comparison with " + to_string(x));
}

namespace {

BigInt rational_floor(const Rational& r) { return floor_div(mp::numerator(r), mp::denominator(r)); }

// Appends convergent n given coefficient a_n.
void push_convergent(ConvergentSeq& seq, const BigInt& a) {
  seq.coefficients.push_back(a);
  std::size_t n = seq.coefficients.size() - 1;
  if (a < 1) throw InputError("convergents need r > 1");
  if (n == 0) {
    seq.terms.emplace_back(a, BigInt(1));
  } else if (n == 1) {
    seq.terms.emplace_back(seq.coefficients[0] * a + 1, a);
  } else {
    const Fraction& f1 = seq.terms[n - 1];
    const Fraction& f2 = seq.terms[n - 2];
    seq.terms.emplace_back(a * f1.p() + f2.p(), a * f1.q() + f2.q());
  }
}

}  // namespace

ConvergentSeq convergents(const RealDescriptor& r, std::size_t n_max) {
  ConvergentSeq seq;
  seq.target = describe(r);
  if (const auto* s = std::get_if<QuadraticSurd>(&r)) {
    if (s->compare(Rational(1)) <= 0) throw InputError("convergents need r > 1");
    QuadraticSurd x = *s;
    for (std::size_t n = 0; n <= n_max; ++n) {
      push_convergent(seq, x.floor());
      if (n == n_max) break;
      if (x.is_rational() && x.compare(Rational(x.floor())) == 0) {
        seq.terminated = true;
        break;
      }
      x = x.next_complete_quotient();
    }
    return seq;
  }
  const auto& dec = std::get<DecimalReal>(r);
  if (dec.lo <= 1) throw InputError("convergents need r > 1 (interval reaches 1)");
  Rational lo = dec.lo, hi = dec.hi;
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt a = rational_floor(lo);
    if (rational_floor(hi) != a)
      throw PrecisionError("coefficient a_" + std::to_string(n) + " of " + dec.text + " is not determined");
    push_convergent(seq, a);
    if (n == n_max) break;
    Rational flo = lo - a, fhi = hi - a;
    if (flo == 0) throw PrecisionError("precision of " + dec.text + " exhausted after a_" + std::to_string(n));
    // x -> 1/x reverses the interval.
    lo = 1 / fhi;
    hi = 1 / flo;
  }
  return seq;
}

ConvergentCheck check_convergents(const ConvergentSeq& seq, const RealDescriptor& r) {
  ConvergentCheck check;
  std::ostringstream detail;
  const auto& t = seq.terms;
  for (std::size_t n = 1; n < t.size(); ++n) {
    BigInt det = t[n].q() * t[n - 1].p() - t[n].p() * t[n - 1].q();
    BigInt expected = (n % 2 == 0) ? 1 : -1;
    if (det != expected) {
      check.determinant = false;
      detail << "determinant fails at order " << n << "; ";
    }
  }
  for (std::size_t n = 2; n < t.size(); ++n) {
    bool ok = (n % 2 == 0) ? t[n - 2] < t[n] : t[n] < t[n - 2];
    if (!ok) {
      check.monotone = false;
      detail << "monotonicity fails at order " << n << "; ";
    }
  }
  std::size_t usable = seq.terminated ? t.size() - 1 : t.size();
  for (std::size_t n = 0; n < usable; ++n) {
    const Fraction& f = t[n];
    try {
      int side = compare(r, f.value());
      // Even orders lie below r, odd orders above.
      if ((n % 2 == 0 && side <= 0) || (n % 2 == 1 && side >= 0)) {
        check.monotone = false;
        detail << "order " << n << " on the wrong side of r; ";
      }
      bool ok;
      if (n % 2 == 0) {
        // ceil(p/r) = q  <=>  (q-1) r < p <= q r
        ok = compare(r, f.value()) >= 0 && (f.q() == 1 || compare(r, Rational(f.p(), f.q() - 1)) < 0);
      } else {
        // floor(p/r) = q  <=>  q r <= p < (q+1) r
        ok = compare(r, f.value()) <= 0 && compare(r, Rational(f.p(), f.q() + 1)) > 0;
      }
      if (!ok) {
        check.rounding = false;
        detail << "rounding identity fails at order " << n << "; ";
      }
    } catch (const PrecisionError& e) {
      detail << "order " << n << " undecided: " << e.what() << "; ";
    }
  }
  check.detail = detail.str();
  return check;
}

}  // namespace shannon
