#include "doctest.h"
#include "oracle.hpp"
#include "shannon/error.hpp"
#include "shannon/rational.hpp"

using namespace shannon;

TEST_SUITE("rational") {
  TEST_CASE("reduce cancels common factors") {
    CHECK(reduce(10, 4) == Fraction(5, 2));
    CHECK(reduce(8, 3).str() == "8/3");
    CHECK(reduce(30, 12) == Fraction(5, 2));
    CHECK(Fraction(6, 3).str() == "2");
    CHECK(Fraction(6, 3).exact_str() == "2/1");
    CHECK_THROWS_AS(Fraction(0, 3), InputError);
    CHECK_THROWS_AS(Fraction(3, 0), InputError);
  }

  TEST_CASE("parsing") {
    CHECK(parse_fraction("15/2") == Fraction(15, 2));
    CHECK(parse_fraction("3") == Fraction(3, 1));
    CHECK(parse_fraction("10/4") == Fraction(5, 2));
    CHECK_THROWS_AS(parse_fraction("x/2"), InputError);
    CHECK_THROWS_AS(parse_fraction("5/"), InputError);
    CHECK_THROWS_AS(parse_fraction("-5/2"), InputError);
    CHECK(parse_rational("0.12") == Rational(3, 25));
    CHECK(parse_rational("0.32") == Rational(8, 25));
    CHECK(parse_rational("007") == Rational(7));
    CHECK(parse_rational("3/25") == Rational(3, 25));
  }

  TEST_CASE("ordering compares values") {
    CHECK(Fraction(5, 2) < Fraction(8, 3));
    CHECK(Fraction(8, 3) < Fraction(11, 4));
    CHECK(Fraction(2, 1) < Fraction(9, 4));
  }

  TEST_CASE("removal pairs") {
    CHECK(removal_pair(Fraction(8, 3)).child == Fraction(5, 2));
    CHECK(removal_pair(Fraction(383, 51)).child == Fraction(15, 2));
    CHECK(removal_pair(Fraction(5, 2)).child == Fraction(2, 1));
    CHECK(removal_pair(Fraction(7, 1)).child == Fraction(6, 1));
  }

  TEST_CASE("removal pair matches the defining identity for every small fraction") {
    for (std::int64_t p = 2; p <= 60; ++p)
      for (std::int64_t q = 1; 2 * q <= p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const Fraction c = removal_pair(Fraction(p, q)).child;
        const BigInt pc = c.p(), qc = c.q();
        if (q == 1) {
          CHECK(c == Fraction(p - 1, 1));
          continue;
        }
        CHECK(BigInt(p) * qc - BigInt(q) * pc == 1);
        CHECK(pc < p);
        CHECK(qc < q);
      }
  }

  TEST_CASE("minimal Bezout pair agrees with direct search") {
    for (std::int64_t p = 2; p <= 40; ++p)
      for (std::int64_t q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1 || p < 2 * q) continue;
        const auto [a, b] = oracle::bezout_search(p, q);
        const BezoutPair bz = minimal_bezout(Fraction(p, q));
        CHECK(bz.a == a);
        CHECK(bz.b == b);
      }
  }

  TEST_CASE("converging sequences") {
    auto terms = [](Fraction t, std::size_t n) {
      std::vector<std::string> out;
      for (const auto& f : converging_sequence(t, n).terms) out.push_back(f.str());
      return out;
    };
    CHECK(terms(Fraction(7, 2), 3) == std::vector<std::string>{"11/3", "18/5", "25/7"});
    CHECK(terms(Fraction(2, 1), 2) == std::vector<std::string>{"5/2", "7/3"});
    CHECK(terms(Fraction(5, 2), 1) == std::vector<std::string>{"8/3"});
  }

  TEST_CASE("converging sequence terms decrease to the target and have it as removal child") {
    for (auto t : {Fraction(7, 2), Fraction(5, 2), Fraction(15, 2), Fraction(8, 3), Fraction(3, 1)}) {
      const auto seq = converging_sequence(t, 6);
      REQUIRE(seq.terms.size() == 6);
      for (std::size_t i = 0; i < seq.terms.size(); ++i) {
        CHECK(seq.terms[i] > t);
        if (i) CHECK(seq.terms[i] < seq.terms[i - 1]);
        CHECK(removal_pair(seq.terms[i]).child == t);
      }
    }
  }
}
