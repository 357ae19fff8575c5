#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "submax/pi_arith.hpp"

using namespace submax;

TEST_CASE("prime_support basics") {
  CHECK(prime_support(168) == std::vector<std::uint64_t>{2, 3, 7});
  CHECK(prime_support(1).empty());
  CHECK(prime_support(29120) == std::vector<std::uint64_t>{2, 5, 7, 13});
  CHECK_THROWS_AS(prime_support(0), invalid_input);
}

TEST_CASE("pi_part basics") {
  CHECK(pi_part(168, PrimeSet{2, 3}) == 24);
  CHECK(pi_part(63, PrimeSet{2}) == 1);
  PrimeSet all(prime_support(5616));
  CHECK(pi_part(5616, all) == 5616);
}

TEST_CASE("pi_part factorisation invariant") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t n = 1 + rng() % 2000000;
    std::vector<std::uint64_t> sample;
    for (auto p : {2, 3, 5, 7, 11, 13}) {
      if (rng() & 1) sample.push_back(p);
    }
    PrimeSet pi(sample);
    std::uint64_t a = pi_part(n, pi);
    std::uint64_t b = pi_prime_part(n, pi);
    CHECK(a * b == n);
    CHECK(std::gcd(a, b) == 1);
    CHECK(is_pi_number(a, pi));
  }
}

TEST_CASE("pi_part multiplicative on coprime arguments") {
  PrimeSet pi{2, 5};
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t a = 1 + rng() % 5000;
    std::uint64_t b = 1 + rng() % 5000;
    if (std::gcd(a, b) != 1) continue;
    CHECK(pi_part(a * b, pi) == pi_part(a, pi) * pi_part(b, pi));
  }
}

TEST_CASE("is_pi_number") {
  CHECK(is_pi_number(24, PrimeSet{2, 3}));
  CHECK(is_pi_number(1, PrimeSet{}));
  CHECK_FALSE(is_pi_number(14, PrimeSet{2, 3}));
}

TEST_CASE("congruence_in") {
  CHECK(congruence_in(7, {7, 31}, 72));
  CHECK(congruence_in(137, {41}, 48));
  CHECK(congruence_in(17, {1, -1}, 8));
  CHECK_FALSE(congruence_in(3, {1, -1}, 8));
  // invariance under adding the modulus to residues
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t q = static_cast<std::int64_t>(rng() % 10000);
    std::int64_t r = static_cast<std::int64_t>(rng() % 200) - 100;
    std::uint64_t m = 2 + rng() % 97;
    CHECK(congruence_in(q, {r}, m) ==
          congruence_in(q, {r + static_cast<std::int64_t>(m)}, m));
  }
}

TEST_CASE("thompson_family_check") {
  CHECK(thompson_family_check({Family::L2_PRIME, 7}));
  CHECK_FALSE(thompson_family_check({Family::L2_PRIME, 11}));
  CHECK_FALSE(thompson_family_check({Family::L2_2P, 16}));
  CHECK(thompson_family_check({Family::L2_2P, 4}));
  CHECK(thompson_family_check({Family::L2_2P, 8}));
  CHECK(thompson_family_check({Family::L2_3P, 27}));
  CHECK_FALSE(thompson_family_check({Family::L2_3P, 3}));
  CHECK_FALSE(thompson_family_check({Family::L2_3P, 9}));
  CHECK(thompson_family_check({Family::SZ, 8}));
  CHECK(thompson_family_check({Family::SZ, 32}));
  CHECK_FALSE(thompson_family_check({Family::SZ, 4}));
  CHECK_FALSE(thompson_family_check({Family::SZ, 2}));
  CHECK(thompson_family_check({Family::L3_3, 3}));
  CHECK(thompson_family_check({Family::L2_PRIME, 137}));
  CHECK(thompson_family_check({Family::L2_PRIME, 103}));
  CHECK(thompson_family_check({Family::L2_PRIME, 13}));
  CHECK(thompson_family_check({Family::L2_PRIME, 17}));
}

TEST_CASE("is_prime small and around boundaries") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(137));
  CHECK_FALSE(is_prime(143));
  CHECK(is_prime(2147483647ull));  // 2^31 - 1
}
