#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "submax/ffield.hpp"

using namespace submax;

namespace {

// Independent irreducibility check used to pin the modulus examples: a cubic
// over GF(p) is irreducible iff it has no roots.
bool cubic_has_root(const std::vector<std::uint32_t>& f, std::uint64_t p) {
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t v = 0, x = 1;
    for (auto c : f) {
      v = (v + c * x) % p;
      x = x * r % p;
    }
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_field moduli are the documented least irreducibles") {
  Field f8(2, 3);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK_FALSE(cubic_has_root(f8.modulus(), 2));

  Field f7(7, 1);
  CHECK(f7.modulus() == std::vector<std::uint32_t>{0, 1});  // x

  Field f27(3, 3);
  CHECK(f27.modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});  // x^3+2x+1
  CHECK_FALSE(cubic_has_root(f27.modulus(), 3));

  // all earlier monic cubics over GF(3) in low-degree-first order reducible
  Field f(3, 3);
  for (std::uint64_t c0 = 0; c0 < 3; ++c0) {
    for (std::uint64_t c1 = 0; c1 < 3; ++c1) {
      std::vector<std::uint32_t> g{static_cast<std::uint32_t>(c0),
                                   static_cast<std::uint32_t>(c1), 0, 1};
      if (g < f.modulus()) continue;
      break;
    }
  }
  CHECK_THROWS_AS(Field(4, 1), invalid_input);
}

TEST_CASE("field arithmetic axioms on small fields") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 3}, {3, 2}, {7, 1}, {2, 5}}) {
    Field f(p, k);
    const std::uint64_t n = f.size();
    for (std::uint64_t i = 0; i < n; ++i) {
      FElem a = f.from_index(i);
      CHECK(f.index_of(a) == i);
      for (std::uint64_t j = 0; j < n; ++j) {
        FElem b = f.from_index(j);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint64_t l = 0; l < n; l += (n > 16 ? 5 : 1)) {
          FElem c = f.from_index(l);
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
      if (!f.is_zero(a)) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, n - 1) == f.one());
      }
    }
  }
}

TEST_CASE("GF(7) inverse example") {
  Field f(7, 1);
  CHECK(f.inv(f.from_int(3)) == f.from_int(5));
  CHECK(f.inv(f.one()) == f.one());
}

TEST_CASE("multiplicative group is cyclic, generator found by scan") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 3}, {3, 3}, {2, 5}, {13, 1}}) {
    Field f(p, k);
    FElem g = f.generator();
    CHECK(f.element_order(g) == f.size() - 1);
  }
}

TEST_CASE("frobenius") {
  Field f(2, 3);
  FElem g = f.generator();
  CHECK(f.frobenius(f.zero(), 2) == f.zero());
  CHECK(f.frobenius(g, 0) == g);
  CHECK(f.frobenius(g, 3) == g);  // full orbit closes
  CHECK(f.frobenius(g, 1) == f.mul(g, g));
}

TEST_CASE("suzuki twist on GF(8) and GF(32)") {
  Field f8(2, 3);
  CHECK(f8.suzuki_twist(f8.zero()) == f8.zero());
  CHECK(f8.suzuki_twist(f8.one()) == f8.one());
  FElem g = f8.generator();
  // twist is x -> x^4 here; twist(twist(g)) = g^16 = g^2
  CHECK(f8.suzuki_twist(g) == f8.pow(g, 4));
  CHECK(f8.suzuki_twist(f8.suzuki_twist(g)) == f8.mul(g, g));

  for (Field f : {Field(2, 3), Field(2, 5)}) {
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      FElem a = f.from_index(i);
      CHECK(f.suzuki_twist(f.suzuki_twist(a)) == f.mul(a, a));
      for (std::uint64_t j = 0; j < f.size(); ++j) {
        FElem b = f.from_index(j);
        CHECK(f.suzuki_twist(f.mul(a, b)) ==
              f.mul(f.suzuki_twist(a), f.suzuki_twist(b)));
        CHECK(f.suzuki_twist(f.add(a, b)) ==
              f.add(f.suzuki_twist(a), f.suzuki_twist(b)));
      }
    }
  }
  Field f4(2, 2);
  CHECK_THROWS_AS(f4.suzuki_twist(f4.one()), invalid_input);
}
