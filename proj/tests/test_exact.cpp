#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wmk/exact.hpp"

using namespace wmk;

namespace {

RatFunc P(const std::string& s) { return parse_ratfunc(s); }

LaurentPoly random_poly(std::mt19937& g, int terms, int maxdeg) {
  std::vector<LaurentPoly::Term> ts;
  std::uniform_int_distribution<int> coeff(-3, 3), deg(-1, maxdeg), var(0, 2);
  const Var vars[3] = {QQ, DD, T};
  for (int i = 0; i < terms; ++i) {
    Mono m;
    for (int k = 0; k < 2; ++k) m.e[vars[var(g)]] += deg(g);
    ts.push_back({m, coeff(g)});
  }
  return LaurentPoly::from_terms(ts);
}

RatFunc random_rat(std::mt19937& g) {
  LaurentPoly d;
  while (d.is_zero()) d = random_poly(g, 3, 2);
  return RatFunc::make(random_poly(g, 3, 2), d);
}

}  // namespace

TEST_CASE("cancellation to one") {
  CHECK(P("(1-q)/(1-t)*(1-t)/(1-q)").is_one());
  CHECK(P("(1-q^2)/(1-q)").same_form(P("1+q")));
  CHECK(P("q^-1*q").is_one());
}

TEST_CASE("gcd recovers common factor") {
  LaurentPoly a = parse_poly("(1-q*t)*(1-q)"), b = parse_poly("(1-q*t)*(1-t)");
  LaurentPoly g = gcd(a, b);
  CHECK((g == parse_poly("q*t-1") || g == parse_poly("1-q*t")));
  CHECK(gcd(parse_poly("qq^2-dd^2"), parse_poly("qq^3+dd^3")) == parse_poly("qq+dd"));
  CHECK(gcd(parse_poly("1-q"), parse_poly("1-t")).is_constant());
  CHECK(gcd(parse_poly("q^-3*(1-q)^2*(2+t)"), parse_poly("4*t*(1-q)*(q+t)")) == parse_poly("q-1"));
}

TEST_CASE("canonical denominator") {
  RatFunc f = P("(2*q)/(4*q^3-2*q^2*t)");
  CHECK(f.den() == parse_poly("2*q-t"));
  CHECK(f.num() == parse_poly("q^-1"));
  CHECK(P("1/(-1+q)").den() == parse_poly("q-1"));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(P("1/(q-q)"), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(), DivisionByZero);
}

TEST_CASE("limit at one") {
  CHECK(limit_at_one(P("(1-u^3)/(1-u)"), U) == RatFunc(3));
  CHECK(limit_at_one(P("(1-u^2*q)/(1-u*q)"), U) == P("(1-q)/(1-q)"));
  CHECK(limit_at_one(P("(1-u)^2*q/((1-u^2)*(1-u*t))"), U).is_zero());
  CHECK_THROWS_AS(limit_at_one(P("q/(1-u)"), U), IrregularPoint);
}

TEST_CASE("matching substitutions") {
  RatFunc qt = P("q*t");
  CHECK(qt.substitute(matching_map(Matching::Minus)) == P("qq^2"));
  CHECK(qt.substitute(matching_map(Matching::Plus)) == P("qq^-2"));
  CHECK(P("q").substitute(matching_map(Matching::Minus)) == P("qq*dd"));
  CHECK(P("t").substitute(matching_map(Matching::Plus)) == P("qq^-1*dd^-1"));
}

TEST_CASE("to_qt parity") {
  auto a = to_qt(P("(qq+dd)/(qq-dd)"), Matching::Minus);
  REQUIRE(a);
  CHECK(*a == P("(t+1)/(t-1)"));
  CHECK_FALSE(to_qt(P("qq+1"), Matching::Minus));
  CHECK_FALSE(to_qt(P("qq"), Matching::Minus));
  auto b = to_qt(P("qq^2"), Matching::Plus);
  REQUIRE(b);
  CHECK(*b == P("q^-1*t^-1"));
}

TEST_CASE("to_qt inverts the matchings") {
  std::mt19937 g(7);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly n = random_poly(g, 3, 2).substitute({{QQ, {1, Mono::var(Q)}}, {DD, {1, Mono::var(T)}}});
    LaurentPoly d = random_poly(g, 2, 2).substitute({{QQ, {1, Mono::var(Q)}}, {DD, {1, Mono::var(T)}}});
    if (d.is_zero()) continue;
    RatFunc f = RatFunc::make(n, d);
    for (Matching m : {Matching::Minus, Matching::Plus}) {
      auto back = to_qt(f.substitute(matching_map(m)), m);
      REQUIRE(back);
      CHECK(*back == f);
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 g(2024);
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc a = random_rat(g), b = random_rat(g), c = random_rat(g);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a / a).is_one());
    CHECK(a * b == b * a);
    // canonical forms are unique
    CHECK((a + b).same_form(canonical(RatFunc::make(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()))));
  }
}

TEST_CASE("string and json round trip") {
  std::mt19937 g(99);
  for (int trial = 0; trial < 30; ++trial) {
    RatFunc a = random_rat(g);
    CHECK(parse_ratfunc(a.to_string()).same_form(a));
    CHECK(RatFunc::from_json(a.to_json()).same_form(a));
  }
  CHECK(P("-q^2*t + 1").to_string() == "(-1)*q^2*t + 1");
  CHECK_THROWS_AS(P("q +* t"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
}

TEST_CASE("quantum integers") {
  CHECK(qint(3) == parse_poly("qq^2+1+qq^-2"));
  CHECK(RatFunc(qint(4)) == P("(qq^4-qq^-4)/(qq-qq^-1)"));
}
