#include "shannon/rational.hpp"

#include <cctype>
#include <limits>

#include "shannon/error.hpp"

namespace shannon {

Fraction::Fraction(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ == 0) throw InputError("fraction with zero denominator");
  if (p_ < 1 || q_ < 1) throw InputError("fraction must have positive numerator and denominator");
  BigInt g = boost::multiprecision::gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

double Fraction::to_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }

std::string Fraction::str() const { return q_ == 1 ? p_.str() : p_.str() + "/" + q_.str(); }

std::string Fraction::exact_str() const { return p_.str() + "/" + q_.str(); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  BigInt lhs = a.p_ * b.q_;
  BigInt rhs = b.p_ * a.q_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction reduce(const BigInt& p, const BigInt& q) { return Fraction(p, q); }

BigInt decimal_bigint(std::string_view digits) {
  // Boost reads a leading zero as an octal prefix.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

namespace {

BigInt parse_positive(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("malformed fraction '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("malformed fraction '" + std::string(whole) + "'");
  return decimal_bigint(s);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_positive(s, text), BigInt(1));
  return Fraction(parse_positive(trim(s.substr(0, slash)), text),
                  parse_positive(trim(s.substr(slash + 1)), text));
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos) return parse_fraction(s).value();
  auto point = s.find('.');
  std::string_view whole = s.substr(0, point);
  std::string_view frac = point == std::string_view::npos ? std::string_view{} : s.substr(point + 1);
  if (whole.empty() && frac.empty()) throw InputError("malformed number '" + std::string(text) + "'");
  for (std::string_view part : {whole, frac})
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("malformed number '" + std::string(text) + "'");
  std::string digits = std::string(whole) + std::string(frac);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  return Rational(decimal_bigint(digits), scale);
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer " + v.str() + " out of 64-bit range");
  return static_cast<std::int64_t>(v);
}

namespace {

// Inverse of a modulo m for gcd(a, m) = 1, in [0, m).
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

}  // namespace

RemovalPair removal_pair(const Fraction& f) {
  if (f.p() < 2 * f.q()) throw InputError("vertex removal needs p/q >= 2, got " + f.str());
  if (f.q() == 1) return {f, Fraction(f.p() - 1, BigInt(1))};
  // p q' = 1 (mod q) fixes q' in (0, q); then p' = (p q' - 1) / q.
  BigInt q_child = mod_inverse(f.p(), f.q());
  BigInt p_child = (f.p() * q_child - 1) / f.q();
  return {f, Fraction(p_child, q_child)};
}

BezoutPair minimal_bezout(const Fraction& target) {
  const BigInt& p = target.p();
  const BigInt& q = target.q();
  // a q = 1 (mod p); b = (a q - 1) / p must be positive.
  BigInt a = p == 1 ? BigInt(1) : mod_inverse(q, p);
  if (a == 0) a = p;
  BigInt b = (a * q - 1) / p;
  while (b <= 0) {
    a += p;
    b += q;
  }
  return {a, b};
}

ConvergingSequence converging_sequence(const Fraction& target, std::size_t count) {
  if (target.p() < 2 * target.q()) throw InputError("converging sequence target must be >= 2");
  ConvergingSequence seq{target, minimal_bezout(target), {}};
  seq.terms.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    BigInt pn = seq.start.a + target.p() * n;
    BigInt qn = seq.start.b + target.q() * n;
    seq.terms.emplace_back(pn, qn);
  }
  return seq;
}

}  // namespace shannon
