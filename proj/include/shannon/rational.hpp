#pragma once

// Exact rational labels for fraction graphs, vertex-removal (Bezout) pairs and
// the sequences built from them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shannon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Positive reduced fraction p/q. Labels the fraction graph E_{p/q}.
class Fraction {
 public:
  Fraction() : p_(1), q_(1) {}
  /// Reduces p/q. Throws InputError unless p >= 1 and q >= 1.
  Fraction(BigInt p, BigInt q);
  Fraction(std::int64_t p, std::int64_t q) : Fraction(BigInt(p), BigInt(q)) {}
  explicit Fraction(std::int64_t n) : Fraction(BigInt(n), BigInt(1)) {}

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  Rational value() const { return Rational(p_, q_); }
  bool is_integer() const { return q_ == 1; }
  BigInt floor() const { return p_ / q_; }
  double to_double() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;
  /// Always "p/q".
  std::string exact_str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  BigInt p_;
  BigInt q_;
};

Fraction reduce(const BigInt& p, const BigInt& q);

/// Parses "p/q" or a bare integer "p".
Fraction parse_fraction(std::string_view text);

/// Nonnegative integer from a nonempty string of decimal digits.
BigInt decimal_bigint(std::string_view digits);

/// Exact value of a nonnegative decimal ("0.12") or fraction ("3/25").
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Narrowing with a range check; throws InputError when the value does not fit.
std::int64_t to_int64(const BigInt& v);

/// E_{parent} with one vertex removed is equivalent to E_{child}.
struct RemovalPair {
  Fraction parent;
  Fraction child;
};

/// The unique child p'/q' with 0 < p' < p, 0 < q' < q and p q' - q p' = 1.
/// For q = 1 the child is (p-1)/1. Requires f >= 2.
RemovalPair removal_pair(const Fraction& f);

/// Integers a, b > 0 with a q' - b p' = 1 for target p'/q'.
struct BezoutPair {
  BigInt a;
  BigInt b;
};

/// Smallest positive solution of a q' - b p' = 1.
BezoutPair minimal_bezout(const Fraction& target);

/// Terms (a + p' n)/(b + q' n), n = 1..count, decreasing to the target.
struct ConvergingSequence {
  Fraction target;
  BezoutPair start;
  std::vector<Fraction> terms;
};

ConvergingSequence converging_sequence(const Fraction& target, std::size_t count);

}  // namespace shannon
