#include <doctest.h>

#include <random>
#include <sstream>

#include "crowdest/errors.hpp"
#include "crowdest/poly.hpp"

using namespace crowdest;

namespace {

Polynomial random_poly(std::mt19937& eng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rat> cs(deg(eng) + 1);
  for (auto& c : cs) c = make_rat(num(eng), den(eng));
  return Polynomial(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Polynomial x2p1({Rat(1), Rat(0), Rat(1)});
  Polynomial x({Rat(0), Rat(1)});
  CHECK((x2p1 * x).degree() == 3);
  CHECK((x2p1 - x2p1).is_zero());
  CHECK(x2p1.eval(Rat(3)) == 10);
  CHECK(x2p1.derivative().eval(Rat(3)) == 6);
}

TEST_CASE("division contract: reconstruction and remainder degree") {
  Polynomial x2p1({Rat(1), Rat(0), Rat(1)});
  Polynomial x({Rat(0), Rat(1)});
  auto d = poly_divide(x2p1, x);
  CHECK(d.quotient == x);
  CHECK(d.remainder == Polynomial::constant(Rat(1)));

  auto self = poly_divide(x2p1, x2p1);
  CHECK(self.quotient == Polynomial::constant(Rat(1)));
  CHECK(self.remainder.is_zero());

  CHECK_THROWS_AS(poly_divide(x, Polynomial()), DomainError);
}

TEST_CASE("division property on random pairs") {
  std::mt19937 eng(7);
  for (int it = 0; it < 200; ++it) {
    Polynomial a = random_poly(eng, 9);
    Polynomial b = random_poly(eng, 5);
    if (b.is_zero()) continue;
    auto d = poly_divide(a, b);
    CHECK(d.quotient * b + d.remainder == a);
    CHECK(d.remainder.degree() < b.degree());
  }
}

TEST_CASE("interval evaluation encloses point values") {
  std::mt19937 eng(11);
  std::uniform_int_distribution<long> pick(-20, 20);
  for (int it = 0; it < 100; ++it) {
    Polynomial p = random_poly(eng, 7);
    Rat a = make_rat(pick(eng), 7), b = a + make_rat(1, 3);
    RatInterval iv = p.eval_interval({a, b});
    for (int s = 0; s <= 3; ++s) {
      Rat x = a + make_rat(s, 9);
      Rat v = p.eval(x);
      CHECK(iv.lo <= v);
      CHECK(v <= iv.hi);
    }
  }
}

TEST_CASE("serialization shapes") {
  Polynomial p({make_rat(1, 2), Rat(0), Rat(-3)});
  auto strs = p.coeff_strings();
  REQUIRE(strs.size() == 3);
  CHECK(strs[0] == "1/2");
  CHECK(strs[1] == "0/1");
  CHECK(strs[2] == "-3/1");
  std::ostringstream os;
  p.write_csv(os);
  CHECK(os.str() == "degree,numerator,denominator\n0,1,2\n1,0,1\n2,-3,1\n");
}

TEST_CASE("intpoly sign evaluation matches rational evaluation") {
  std::mt19937 eng(23);
  std::uniform_int_distribution<long> pick(-50, 50);
  for (int it = 0; it < 100; ++it) {
    Polynomial p = random_poly(eng, 8);
    IntPoly w = intpoly::from_polynomial(p);
    if (w.empty()) continue;
    Rat x = make_rat(pick(eng), 1 + (it % 13));
    CHECK(intpoly::sign_at(w, x) == sign(p.eval(x)));
  }
}

TEST_CASE("primitive part removes content") {
  IntPoly p{BigInt(6), BigInt(-9), BigInt(12)};
  IntPoly q = intpoly::primitive_part(p);
  CHECK(q == IntPoly{BigInt(2), BigInt(-3), BigInt(4)});
  CHECK(intpoly::content(q) == 1);
}
