#include <algorithm>
#include <random>

#include "ramcover/errors.hpp"
#include "stab_chain.hpp"

namespace ramcover {
namespace detail {

StabChain::StabChain(const GeneratorSet& g, const BigInt& order_bound) : n_(g.degree), bound_(order_bound) {
  std::vector<Permutation> gens;
  for (const auto& x : g.gens)
    if (!x.is_identity()) gens.push_back(x);
  if (gens.empty()) return;
  for (const auto& x : gens) {
    auto [r, stop] = sift(x, 0);
    if (!r.is_identity()) add_residue(r, 0, stop);
  }
  random_phase(gens);
  if (!complete()) deterministic_phase();
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_) o *= lv.orbit.size();
  return o;
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    int beta = g(base_[i]);
    int k = levels_[i].slot[static_cast<std::size_t>(beta)];
    if (k < 0) return {std::move(g), i};
    g = g * levels_[i].trans_inv[static_cast<std::size_t>(k)];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != n_) return false;
  auto [r, stop] = sift(p, 0);
  return stop == levels_.size() && r.is_identity();
}

void StabChain::rebuild_orbit(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit.assign(1, base_[i]);
  lv.slot.assign(static_cast<std::size_t>(n_), -1);
  lv.slot[static_cast<std::size_t>(base_[i])] = 0;
  lv.trans.assign(1, Permutation(n_));
  lv.trans_inv.assign(1, Permutation(n_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    int pt = lv.orbit[k];
    for (const auto& s : lv.gens) {
      int q = s(pt);
      if (lv.slot[static_cast<std::size_t>(q)] >= 0) continue;
      lv.slot[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      Permutation u = lv.trans[k] * s;
      lv.trans_inv.push_back(u.inverse());
      lv.trans.push_back(std::move(u));
    }
  }
}

void StabChain::add_residue(const Permutation& r, std::size_t from, std::size_t stop) {
  if (stop == levels_.size()) {
    // r fixes every base point: extend the base by a point r moves.
    int moved = 0;
    while (r(moved) == moved) ++moved;
    base_.push_back(moved);
    levels_.emplace_back();
  }
  for (std::size_t l = from; l <= stop; ++l) {
    levels_[l].gens.push_back(r);
    rebuild_orbit(l);
  }
}

void StabChain::random_phase(const std::vector<Permutation>& gens) {
  // Product replacement; seeded deterministically so results are reproducible.
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n_));
  std::vector<Permutation> slots = gens;
  while (slots.size() < 10) slots.push_back(gens[slots.size() % gens.size()]);
  Permutation acc(n_);
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  auto step = [&] {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    if (rng() & 1)
      slots[i] = slots[i] * slots[j];
    else
      slots[i] = slots[j] * slots[i];
    acc = acc * slots[i];
    return acc;
  };
  for (int k = 0; k < 50; ++k) step();
  int quiet = 0;
  while (quiet < 30 && !complete()) {
    auto [r, stop] = sift(step(), 0);
    if (r.is_identity() && stop == levels_.size()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    add_residue(r, 0, stop);
  }
}

void StabChain::deterministic_phase() {
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        const Level& lv = levels_[i];
        const Permutation& gen = lv.gens[s];
        int image = gen(lv.orbit[k]);
        Permutation h = lv.trans[k] * gen * lv.trans_inv[static_cast<std::size_t>(lv.slot[static_cast<std::size_t>(image)])];
        if (h.is_identity()) continue;
        auto [r, stop] = sift(std::move(h), i + 1);
        if (stop == levels_.size() && r.is_identity()) continue;
        add_residue(r, i + 1, stop);
        if (complete()) return;
        i = stop + 1;  // resume at the deepest modified level (after the decrement below)
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
  }
}

}  // namespace detail

namespace {

BigInt parity_bound(const GeneratorSet& g) {
  BigInt bound = factorial(g.degree);
  bool all_even = std::all_of(g.gens.begin(), g.gens.end(), [](const Permutation& p) { return p.is_even(); });
  if (all_even && g.degree >= 2) bound /= 2;
  return bound;
}

void check_cap(const GeneratorSet& g, const Caps& caps) {
  if (g.degree > caps.chain_degree)
    throw CapExceeded("degree " + std::to_string(g.degree) + " exceeds stabilizer-chain cap " +
                      std::to_string(caps.chain_degree));
}

}  // namespace

BigInt group_order(const GeneratorSet& g, const Caps& caps) {
  check_cap(g, caps);
  return detail::StabChain(g, parity_bound(g)).order();
}

bool contains(const GeneratorSet& g, const Permutation& p, const Caps& caps) {
  check_cap(g, caps);
  return detail::StabChain(g, parity_bound(g)).contains(p);
}

}  // namespace ramcover
