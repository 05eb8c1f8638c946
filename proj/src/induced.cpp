#include "ramcover/induced.hpp"

#include <map>

#include "ramcover/errors.hpp"

namespace ramcover {

BranchTuple::BranchTuple(int degree, std::vector<Permutation> cycles) : degree_(degree), cycles_(std::move(cycles)) {
  if (cycles_.empty()) throw DomainError("branch tuple is empty");
  for (const auto& c : cycles_)
    if (c.degree() != degree) throw DomainError("branch cycle degree mismatch");
  if (!product(cycles_, degree).is_identity()) throw DomainError("branch cycles do not multiply to the identity");
  if (!is_transitive(generators())) throw DomainError("branch cycles generate an intransitive group");
}

RamificationData BranchTuple::ramification() const {
  std::vector<Partition> types;
  for (const auto& c : cycles_) types.push_back(cycle_type(c));
  return RamificationData(degree_, std::move(types));
}

std::vector<Partition::Run> pair_orbit_split(Count r1, Count r2, bool same_orbit) {
  if (r1 < 1 || r2 < 1) throw DomainError("orbit lengths must be positive");
  if (!same_orbit) return {{lcm(r1, r2), gcd(r1, r2)}};
  if (r1 != r2) throw DomainError("same orbit requires equal lengths");
  if (r1 % 2 == 1) return {{r1, (r1 - 1) / 2}};
  return {{r1 / 2, 1}, {r1, r1 / 2 - 1}};
}

Partition lift_to_2sets(const Partition& e) {
  std::map<Count, Count> acc;
  const auto& runs = e.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto [r, c] = runs[i];
    for (auto [len, n] : pair_orbit_split(r, r, true)) acc[len] += n * c;
    if (c >= 2)
      for (auto [len, n] : pair_orbit_split(r, r, false)) acc[len] += n * (c * (c - 1) / 2);
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      auto [s, cs] = runs[j];
      for (auto [len, n] : pair_orbit_split(r, s, false)) acc[len] += n * c * cs;
    }
  }
  std::vector<Partition::Run> out(acc.begin(), acc.end());
  return Partition::from_runs(std::move(out));
}

RamificationData lift_table_entry(const RamificationData& d) {
  std::vector<Partition> lifted;
  for (const auto& b : d.branches()) lifted.push_back(lift_to_2sets(b));
  return RamificationData(binomial(d.degree(), 2), std::move(lifted));
}

QuotientGenusReport quotient_genera(const BranchTuple& b, int t, const Caps& caps) {
  const int d = b.degree();
  if (t < 1 || t > d) throw DomainError("t out of range");
  QuotientGenusReport rep;
  rep.t = t;
  const Count nsets = binomial(d, t);
  const Count ntuples = falling(d, t);
  const Count tfact = falling(t, t);
  Count sum_f = 0, sum_h = 0;
  for (const auto& x : b.cycles()) {
    BranchContribution c;
    c.r_f = nsets - static_cast<Count>(induced_on_tsets(x, t, caps).cycle_lengths().size());
    c.r_h = ntuples - static_cast<Count>(induced_on_ttuples(x, t, caps).cycle_lengths().size());
    c.r_pi = c.r_h - tfact * c.r_f;
    sum_f += c.r_f;
    sum_h += c.r_h;
    rep.per_branch.push_back(c);
  }
  // Base genus 0: 2(g - 1) = -2n + sum R.
  auto solve = [](Count n, Count sum, const char* which) {
    Count twice = -2 * n + sum + 2;
    if (twice % 2 != 0) throw DomainError(std::string("non-integral genus for ") + which);
    return twice / 2;
  };
  rep.g_Xt = solve(nsets, sum_f, "X_t");
  rep.g_Yt = solve(ntuples, sum_h, "Y_t");
  return rep;
}

}  // namespace ramcover
