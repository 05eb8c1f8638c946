#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ramcover/errors.hpp"
#include "ramcover/numeric.hpp"
#include "ramcover/ramdata.hpp"
#include "ramcover/tables.hpp"

using namespace ramcover;

namespace {

Partition P(std::vector<Count> parts) { return Partition(parts); }

Count phi_naive(Count n) {
  Count c = 0;
  for (Count k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("numeric helpers agree with naive definitions") {
  for (Count n = 1; n <= 200; ++n) {
    CHECK(euler_phi(n) == phi_naive(n));
    bool prime = n > 1;
    for (Count k = 2; k * k <= n; ++k)
      if (n % k == 0) prime = false;
    CHECK(is_prime(n) == prime);
    int v = 0;
    for (Count m = n; m % 2 == 0; m /= 2) ++v;
    CHECK(v2(n) == v);
  }
  CHECK(binomial(10, 3) == 120);
  CHECK(falling(10, 3) == 720);
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("partition storage and compact form") {
  Partition p = P({1, 3, 1, 10, 3});
  CHECK(p.degree() == 18);
  CHECK(p.size() == 5);
  CHECK(p.parts() == std::vector<Count>{10, 3, 3, 1, 1});
  CHECK(p.to_compact() == "10,3^2,1^2");
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.multiplicity(7) == 0);
  CHECK(p.rh_contribution() == 13);
  CHECK(p.lcm_of_parts() == 30);
  CHECK(Partition::trivial(4).is_trivial());
  CHECK_THROWS_AS(P({2, 0}), DomainError);
  // canonicalization is idempotent
  CHECK(Partition(p.parts()) == p);
  CHECK(Partition::from_runs({{2, 1}, {3, 0}, {2, 2}, {1, 1}}) == P({2, 2, 2, 1}));
}

TEST_CASE("expand_star") {
  CHECK(expand_star("1^2,2^*", 10).parts() == std::vector<Count>{2, 2, 2, 2, 1, 1});
  CHECK(expand_star("7", 7) == P({7}));
  CHECK(expand_star("[30,3,5,10^*]", 78) == P({30, 3, 5, 10, 10, 10, 10}));
  CHECK(expand_star("2^0,5", 5) == P({5}));
  CHECK_THROWS_AS(expand_star("2,3^*", 10), DomainError);  // 8 not divisible by 3
  CHECK_THROWS_AS(expand_star("11", 10), DomainError);
  CHECK_THROWS_AS(expand_star("2^*,3^*", 10), ParseError);
  CHECK_THROWS_AS(expand_star("2,,3", 5), ParseError);
  CHECK_THROWS_AS(expand_star("2,x", 5), ParseError);
  try {
    expand_star("2,x", 5);
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
    CHECK(e.token == "x");
  }
}

TEST_CASE("partitions_of matches the oracle enumeration") {
  for (Count n = 1; n <= 16; ++n) {
    auto ours = partitions_of(n);
    auto ref = oracle::partitions(n);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i].parts() == std::vector<Count>(ref[i].begin(), ref[i].end()));
  }
  CHECK(partitions_of(30).size() == 5604);
}

TEST_CASE("ramification data is a canonical multiset") {
  RamificationData a(6, {P({2, 2, 2}), P({3, 3}), P({1, 1, 1, 1, 1, 1}), P({2, 2, 2})});
  RamificationData b(6, {P({2, 2, 2}), P({2, 2, 2}), P({3, 3})});
  CHECK(a == b);
  CHECK(a.branches().size() == 3);
  CHECK(a.rh_sum() == 3 + 3 + 4);
  CHECK_THROWS_AS(RamificationData(6, {P({5})}), DomainError);
}

TEST_CASE("rh_genus") {
  RamificationData i11(13, {P({13}), P({3, 10}), P({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})});
  auto g = rh_genus(i11, 0);
  REQUIRE(g.ok());
  CHECK(*g.genus == 0);
  CHECK(g.rh_sum == 24);

  auto unram = rh_genus(RamificationData(5, {}), 0);
  CHECK(unram.status == GenusResult::Status::Negative);
  CHECK(unram.value == Rational(-4));

  RamificationData f1n1(12, {expand_star("2^5,1^2", 12), expand_star("2^6", 12), expand_star("2^6", 12),
                             expand_star("2^6", 12), expand_star("2,1^10", 12)});
  auto g1 = rh_genus(f1n1, 0);
  REQUIRE(g1.ok());
  CHECK(*g1.genus == 1);

  auto odd = rh_genus(RamificationData(4, {P({2, 1, 1})}), 0);
  CHECK(odd.status == GenusResult::Status::NotIntegral);
  CHECK(total_parity(RamificationData(4, {P({2, 1, 1})})) == Parity::Odd);

  // base genus 1: 2(g - 1) = sum
  auto b1 = rh_genus(RamificationData(4, {P({2, 2}), P({2, 2})}), 1);
  REQUIRE(b1.ok());
  CHECK(*b1.genus == 3);
}

TEST_CASE("rh_genus agrees with the oracle on random data") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    long long n = 2 + static_cast<long long>(rng() % 12);
    auto all = oracle::partitions(n);
    std::vector<oracle::Type> br;
    std::vector<Partition> ours;
    int r = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < r; ++i) {
      auto t = all[rng() % all.size()];
      br.push_back(t);
      ours.emplace_back(std::vector<Count>(t.begin(), t.end()));
    }
    RamificationData d(n, ours);
    long long twice = oracle::twice_genus(n, br);
    auto g = rh_genus(d, 0);
    if (twice % 2 != 0) {
      CHECK(g.status == GenusResult::Status::NotIntegral);
      CHECK(total_parity(d) == Parity::Odd);
    } else if (twice < 0) {
      CHECK(g.status == GenusResult::Status::Negative);
    } else {
      REQUIRE(g.ok());
      CHECK(2 * *g.genus == twice);
      CHECK(total_parity(d) == Parity::Even);
    }
  }
}

TEST_CASE("every table row at every degree has even parity") {
  for (Count l = 13; l <= 40; ++l) {
    for (const auto& e : gen_two_set_table(l)) CHECK(total_parity(e.data) == Parity::Even);
    for (const auto& e : gen_f_table(l)) CHECK(total_parity(e.data) == Parity::Even);
    for (const auto& e : gen_nonexistence_table(l)) CHECK(total_parity(e.data) == Parity::Even);
  }
}
