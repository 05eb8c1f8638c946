#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramcover/certify.hpp"
#include "ramcover/errors.hpp"
#include "ramcover/induced.hpp"
#include "ramcover/tables.hpp"

using namespace ramcover;

namespace {

Permutation from_oracle(const oracle::P& p) { return Permutation(std::vector<int>(p.begin(), p.end())); }
std::vector<Count> as_counts(const oracle::Type& t) { return {t.begin(), t.end()}; }
Partition as_partition(const oracle::Type& t) { return Partition(as_counts(t)); }

// Random transitive product-one triple in S_n.
std::vector<oracle::P> random_triple(int n, std::mt19937_64& rng) {
  for (;;) {
    auto a = oracle::random_perm(n, rng), b = oracle::random_perm(n, rng);
    std::vector<oracle::P> g = {a, b, oracle::inv(oracle::mul(a, b))};
    if (oracle::transitive(g)) return g;
  }
}

BranchTuple to_tuple(const std::vector<oracle::P>& g) {
  std::vector<Permutation> c;
  for (const auto& p : g) c.push_back(from_oracle(p));
  return BranchTuple(static_cast<int>(g.front().size()), c);
}

}  // namespace

TEST_CASE("pair orbit split") {
  using R = std::vector<Partition::Run>;
  auto norm = [](R r) { return Partition::from_runs(r); };
  CHECK(norm(pair_orbit_split(4, 6, false)) == Partition({12, 12}));
  CHECK(norm(pair_orbit_split(5, 5, true)) == Partition({5, 5}));
  CHECK(norm(pair_orbit_split(6, 6, true)) == Partition({6, 6, 3}));
  CHECK(norm(pair_orbit_split(1, 1, true)).degree() == 0);
  CHECK_THROWS_AS(pair_orbit_split(4, 6, true), DomainError);
  CHECK_THROWS_AS(pair_orbit_split(0, 6, false), DomainError);
}

TEST_CASE("lift to 2-sets: worked cases") {
  CHECK(lift_to_2sets(Partition({5})) == Partition({5, 5}));
  CHECK(lift_to_2sets(Partition({13})) == Partition({13, 13, 13, 13, 13, 13}));
  CHECK(lift_to_2sets(Partition({2, 1, 1})) == Partition({2, 2, 1, 1}));
}

TEST_CASE("lift to 2-sets matches the induced action, exhaustively to degree 12") {
  for (long long n = 2; n <= 12; ++n)
    for (const auto& t : oracle::partitions(n)) {
      auto lifted = lift_to_2sets(as_partition(t));
      CHECK(lifted.degree() == n * (n - 1) / 2);
      CHECK(lifted.parts() == as_counts(oracle::induced_type(oracle::from_type(t), 2, false)));
    }
}

TEST_CASE("lift to 2-sets matches the induced action on random permutations to degree 40") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 2 + static_cast<int>(rng() % 39);
    auto p = oracle::random_perm(n, rng);
    auto ours = lift_to_2sets(as_partition(oracle::cycle_type(p)));
    CHECK(ours == cycle_type(induced_on_tsets(from_oracle(p), 2)));
  }
}

TEST_CASE("branch tuples validate their invariants") {
  CHECK_THROWS_AS(BranchTuple(3, {Permutation::parse("(1,2)", 3), Permutation::parse("(2,3)", 3)}), DomainError);
  CHECK_THROWS_AS(BranchTuple(3, {Permutation::parse("(1,2)", 3), Permutation::parse("(1,2)", 3)}), DomainError);
  BranchTuple ok(3, {Permutation::parse("(1,2)", 3), Permutation::parse("(1,3)", 3), Permutation::parse("(1,3,2)", 3)});
  CHECK(ok.ramification() == RamificationData(3, {Partition({2, 1}), Partition({2, 1}), Partition({3})}));
}

TEST_CASE("quotient genera: worked cases") {
  auto i11 = build_tuple("I1.1-generic", 13, {3, std::nullopt});
  auto q1 = quotient_genera(i11.tuple, 1);
  CHECK(q1.g_Xt == 0);
  CHECK(q1.g_Yt == 0);
  auto q2 = quotient_genera(i11.tuple, 2);
  CHECK(q2.g_Xt == 0);
  REQUIRE(q2.per_branch.size() == 3);
  for (const auto& b : q2.per_branch) CHECK(b.r_h == 2 * b.r_f + b.r_pi);
}

TEST_CASE("quotient genera agree with Riemann-Hurwitz on the oracle's induced types") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = random_triple(8, rng);
    auto tuple = to_tuple(g);
    auto q = quotient_genera(tuple, 2);
    std::vector<oracle::Type> onsets, ontuples;
    for (const auto& x : g) {
      onsets.push_back(oracle::induced_type(x, 2, false));
      ontuples.push_back(oracle::induced_type(x, 2, true));
    }
    CHECK(2 * q.g_Xt == oracle::twice_genus(28, onsets));
    CHECK(2 * q.g_Yt == oracle::twice_genus(56, ontuples));
    auto q1 = quotient_genera(tuple, 1);
    std::vector<oracle::Type> natural;
    for (const auto& x : g) natural.push_back(oracle::cycle_type(x));
    CHECK(2 * q1.g_Xt == oracle::twice_genus(8, natural));
    CHECK(q1.g_Xt == q1.g_Yt);
  }
}

TEST_CASE("chain rule per branch and monotonicity in t") {
  std::mt19937_64 rng(29);
  int samples = 0;
  while (samples < 60) {
    int n = 6 + static_cast<int>(rng() % 4);
    auto g = random_triple(n, rng);
    auto tuple = to_tuple(g);
    auto verdict = classify_alternating(tuple.generators());
    if (verdict.kind != GroupKind::Symmetric && verdict.kind != GroupKind::Alternating) continue;
    ++samples;
    Count prev = -1;
    for (int t = 1; t <= 3; ++t) {
      auto q = quotient_genera(tuple, t);
      Count fact = t == 1 ? 1 : (t == 2 ? 2 : 6);
      for (const auto& b : q.per_branch) CHECK(b.r_h == fact * b.r_f + b.r_pi);
      CHECK(q.g_Xt >= prev);
      prev = q.g_Xt;
    }
  }
}

TEST_CASE("lifting table entries") {
  CHECK(lift_table_entry(*two_set_row("I2.2", 14)) == *f_row("I2.2", 14));
  CHECK(lift_table_entry(*two_set_row("I1.1", 13, 3)) == *f_row("I1.1a", 13, 3));
  CHECK(lift_table_entry(*two_set_row("F1.7", 12)) == lift_table_entry(*two_set_row("F1.9", 12)));
  // conservation
  for (Count l = 13; l <= 30; ++l)
    for (const auto& e : gen_two_set_table(l))
      for (const auto& b : lift_table_entry(e.data).branches()) CHECK(b.degree() == l * (l - 1) / 2);
}
