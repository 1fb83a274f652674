#include "sgforge/binomial.hpp"
#include "support.hpp"

using namespace sgforge;

TEST_CASE("text round trip") {
  for (const char* s : {"X1^2*X3 - X2^4", "X1^9 - X2*X4", "X3 - X1*X2", "X4^2"}) {
    CHECK(to_string(parse_binomial(s, 4)) == s);
  }
  CHECK(to_string(parse_monomial("1", 3)) == "1");
  CHECK(parse_monomial("X2*X1^3*X2", 3).exponents() == std::vector<Int>{3, 2, 0});
  const char* m = "[X1^2, X2^3, X3, X4; X2, X3, X4, X1^7]";
  CHECK(to_string(parse_matrix(m, 4)) == m);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_CODE(parse_monomial("X5", 4), ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(parse_monomial("X0", 4), ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(parse_monomial("Y1", 4), ErrorCode::ParseError);
  CHECK_THROWS_CODE(parse_binomial("X1 + X2", 2), ErrorCode::ParseError);
  CHECK_THROWS_CODE(parse_matrix("[X1, X2; X2]", 2), ErrorCode::ShapeMismatch);
  CHECK_THROWS_CODE(parse_matrix("X1, X2; X2, X1", 2), ErrorCode::ParseError);
  CHECK_THROWS_CODE(parse_matrix("[X1*X2, X2; X2, X1]", 2), ErrorCode::ShapeMismatch);
}

TEST_CASE("monomial arithmetic") {
  Monomial a({2, 0, 1}), b({1, 3, 0});
  CHECK((a * b).exponents() == std::vector<Int>{3, 3, 1});
  CHECK(a.lcm(b).exponents() == std::vector<Int>{2, 3, 1});
  CHECK(Monomial({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(((a * b) / b) == a);
  CHECK(Monomial({1, 0, 0}).coprime(Monomial({0, 2, 1})));
  CHECK_FALSE(a.coprime(b));
  CHECK(a.total_degree() == 3);
  CHECK(Monomial({0, 4, 0}).pure_power_variable() == std::size_t{1});
  CHECK_FALSE(a.pure_power_variable().has_value());
  CHECK(Monomial(3).is_one());
}

TEST_CASE("weighted degree and membership in I_H") {
  WeightedRing R{{6, 13, 40, 41}};
  CHECK(weighted_degree(R, parse_monomial("X1^2*X3", 4)) == 52);
  CHECK(is_in_defining_ideal(R, parse_binomial("X1^2*X3 - X2^4", 4)));
  CHECK_FALSE(is_in_defining_ideal(R, parse_binomial("X1^2*X3 - X2^3", 4)));
  CHECK_FALSE(is_in_defining_ideal(R, Binomial::monomial(parse_monomial("X1", 4))));
  CHECK_THROWS_CODE(weighted_degree(R, Monomial(3)), ErrorCode::DimensionMismatch);
}

TEST_CASE("canonical sign") {
  auto b = canonical(parse_binomial("X2^4 - X1^2*X3", 4));
  CHECK(to_string(b) == "X1^2*X3 - X2^4");
  CHECK(canonical(b) == b);
}

TEST_CASE("minors") {
  auto M = parse_matrix("[X1^2, X2^3, X3, X4; X2, X3, X4, X1^7]", 4);
  auto minors = minors2(M);
  CHECK(minors.size() == 6);
  WeightedRing R{{6, 13, 40, 41}};
  for (const auto& m : minors) {
    CHECK(is_in_defining_ideal(R, m));
    CHECK(canonical(m) == m);
  }
  CHECK(std::find(minors.begin(), minors.end(), parse_binomial("X1^2*X3 - X2^4", 4)) != minors.end());
  CHECK(check_common_difference(R, M) == Int{1});

  WeightedRing R5{{7, 39, 43, 47, 17}};
  CHECK(check_common_difference(R5, parse_matrix("[X1^5, X2, X3, X4, X5; X2, X3, X4, X5^3, X1^3]", 5)) == Int{4});
  CHECK_FALSE(check_common_difference(R, parse_matrix("[X1^2, X2^3, X3, X4; X2, X3, X4, X1^6]", 4)).has_value());
  CHECK_THROWS_CODE(check_common_difference(R, parse_matrix("[X1, X2, X3, X4; X3, X2, X4, X1]", 4)),
                    ErrorCode::ShapeMismatch);
}

TEST_CASE("relabel") {
  std::vector<std::size_t> map{2, 0, 1};
  CHECK(relabel(Monomial({1, 2, 3}), map).exponents() == std::vector<Int>{2, 3, 1});
  auto M = parse_matrix("[X1, X2, X3; X2, X3, X1^2]", 3);
  auto R = relabel(M, map);
  CHECK(to_string(R) == "[X3, X1, X2; X1, X2, X3^2]");
}
