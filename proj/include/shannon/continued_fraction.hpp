#pragma once

// Continued-fraction expansions of quadratic surds (exact) and of decimal
// inputs (interval-certified), with the convergent identities as checks.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shannon/rational.hpp"

namespace shannon {

/// The real number (a + b*sqrt(d)) / c with c > 0 and d >= 0.
class QuadraticSurd {
 public:
  QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c);
  static QuadraticSurd from_rational(const Rational& r);

  /// Parses "A,B,D,C" meaning (A + B*sqrt(D))/C.
  static QuadraticSurd parse(std::string_view text);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& d() const { return d_; }
  const BigInt& c() const { return c_; }

  bool is_rational() const { return b_ == 0; }
  BigInt floor() const;
  BigInt ceil() const;
  /// Sign of (this - r).
  int compare(const Rational& r) const;
  long double approx() const;
  /// 1 / (x - floor(x)); throws PrecisionError if x is an integer.
  QuadraticSurd next_complete_quotient() const;

  std::string str() const;

 private:
  void normalize();

  BigInt a_, b_, d_, c_;
};

/// A real known only to lie in the closed interval [lo, hi].
/// Parsed from a decimal string; the last given digit carries +-1 of uncertainty.
struct DecimalReal {
  Rational lo;
  Rational hi;
  std::string text;

  static DecimalReal parse(std::string_view text);
};

using RealDescriptor = std::variant<QuadraticSurd, DecimalReal>;

std::string describe(const RealDescriptor& r);

/// Sign of (r - x). Throws PrecisionError when a decimal interval straddles x.
int compare(const RealDescriptor& r, const Rational& x);

struct ConvergentSeq {
  std::string target;
  std::vector<BigInt> coefficients;  ///< a_0, a_1, ...
  std::vector<Fraction> terms;       ///< p_n / q_n, order n = index
  bool terminated = false;           ///< rational input whose expansion ended early
};

/// Convergents of orders 0..n_max of r > 1. Decimal inputs throw
/// PrecisionError as soon as a coefficient is not determined by the interval.
ConvergentSeq convergents(const RealDescriptor& r, std::size_t n_max);

struct ConvergentCheck {
  bool determinant = true;  ///< q_n p_{n-1} - p_n q_{n-1} = (-1)^n
  bool monotone = true;     ///< even orders increase, odd orders decrease, bracketing r
  bool rounding = true;     ///< ceil(p_{2n}/r) = q_{2n}, floor(p_{2n+1}/r) = q_{2n+1}
  std::string detail;

  bool ok() const { return determinant && monotone && rounding; }
};

ConvergentCheck check_convergents(const ConvergentSeq& seq, const RealDescriptor& r);

}  // namespace shannon
