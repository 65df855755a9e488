#include "doctest.h"
#include "shannon/continued_fraction.hpp"
#include "shannon/error.hpp"

using namespace shannon;

namespace {

std::vector<std::string> terms(const ConvergentSeq& s) {
  std::vector<std::string> out;
  for (const auto& f : s.terms) out.push_back(f.exact_str());
  return out;
}

}  // namespace

TEST_SUITE("continued_fraction") {
  TEST_CASE("golden ratio plus one") {
    // (1 + sqrt 5)/2 + 1 = (3 + sqrt 5)/2 = [2; 1, 1, 1, ...]
    const RealDescriptor r = QuadraticSurd(3, 1, 5, 2);
    const auto seq = convergents(r, 4);
    CHECK(terms(seq) == std::vector<std::string>{"2/1", "3/1", "5/2", "8/3", "13/5"});
    CHECK(seq.coefficients[0] == 2);
    for (std::size_t i = 1; i < seq.coefficients.size(); ++i) CHECK(seq.coefficients[i] == 1);
    CHECK(check_convergents(seq, r).ok());
  }

  TEST_CASE("sqrt 2 plus 2") {
    const RealDescriptor r = QuadraticSurd(2, 1, 2, 1);
    const auto seq = convergents(r, 3);
    CHECK(terms(seq) == std::vector<std::string>{"3/1", "7/2", "17/5", "41/12"});
    CHECK(check_convergents(seq, r).ok());
  }

  TEST_CASE("orders zero and one follow from the first coefficients") {
    for (const RealDescriptor& r : {RealDescriptor(QuadraticSurd(2, 1, 3, 1)), RealDescriptor(QuadraticSurd(7, 3, 11, 4)),
                                    RealDescriptor(QuadraticSurd::parse("1,1,5,2"))}) {
      const auto seq = convergents(r, 2);
      const BigInt a0 = seq.coefficients[0], a1 = seq.coefficients[1];
      CHECK(seq.terms[0] == Fraction(a0, BigInt(1)));
      CHECK(seq.terms[1].p() * a1 == (a0 * a1 + 1) * seq.terms[1].q());
    }
  }

  TEST_CASE("rational input terminates") {
    const RealDescriptor r = QuadraticSurd::from_rational(Rational(7, 3));
    const auto seq = convergents(r, 10);
    CHECK(seq.terminated);
    CHECK(seq.terms.back() == Fraction(7, 3));
  }

  TEST_CASE("decimal input stops when the interval no longer decides") {
    const RealDescriptor r = DecimalReal::parse("2.41421356237");
    const auto seq = convergents(r, 3);
    CHECK(terms(seq) == std::vector<std::string>{"2/1", "5/2", "12/5", "29/12"});
    CHECK_THROWS_AS(convergents(r, 40), PrecisionError);
  }

  TEST_CASE("surd arithmetic") {
    const QuadraticSurd s(2, 1, 2, 1);
    CHECK(s.floor() == 3);
    CHECK(s.ceil() == 4);
    CHECK(s.compare(Rational(17, 5)) > 0);
    CHECK(s.compare(Rational(41, 12)) < 0);
    CHECK_THROWS_AS(QuadraticSurd::parse("1,2"), InputError);
  }
}
