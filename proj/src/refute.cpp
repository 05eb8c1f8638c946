// Exhaustive search for product-one tuples with prescribed cycle types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>

#include "ramcover/certify.hpp"
#include "ramcover/errors.hpp"

namespace ramcover {

namespace {

constexpr int kMaxDegree = 16;  // images packed 4 bits each into a uint64
using Img = std::array<std::uint8_t, kMaxDegree>;

std::uint64_t encode(const Img& p, int n) {
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) code |= static_cast<std::uint64_t>(p[static_cast<std::size_t>(i)]) << (4 * i);
  return code;
}

Img decode(std::uint64_t code, int n) {
  Img p{};
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (4 * i)) & 0xF);
  return p;
}

// Left to right: i -> q(p(i)).
Img mul(const Img& p, const Img& q, int n) {
  Img r{};
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = q[p[static_cast<std::size_t>(i)]];
  return r;
}

Img inv(const Img& p, int n) {
  Img r{};
  for (int i = 0; i < n; ++i) r[p[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

// Relabel the points of y by g.
Img conj(const Img& y, const Img& g, int n) {
  Img r{};
  for (int i = 0; i < n; ++i) r[g[static_cast<std::size_t>(i)]] = g[y[static_cast<std::size_t>(i)]];
  return r;
}

// Cycle lengths sorted ascending, zero padded; comparable as a key.
Img type_key(const Img& p, int n) {
  Img key{};
  std::array<bool, kMaxDegree> seen{};
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    key[static_cast<std::size_t>(k++)] = static_cast<std::uint8_t>(len);
  }
  std::sort(key.begin(), key.begin() + k);
  return key;
}

Img type_key(const Partition& e) {
  Img key{};
  auto parts = e.parts();
  std::sort(parts.begin(), parts.end());
  for (std::size_t i = 0; i < parts.size(); ++i) key[i] = static_cast<std::uint8_t>(parts[i]);
  return key;
}

// Every permutation of the given type. Each cycle starts at its smallest
// point, which is always the smallest point not yet used, so every element is
// produced exactly once.
void enumerate_class(const Partition& e, int n, std::vector<std::uint64_t>& out) {
  std::vector<std::pair<int, int>> lengths;  // (length, remaining multiplicity)
  for (const auto& [part, mult] : e.runs()) lengths.emplace_back(static_cast<int>(part), static_cast<int>(mult));
  Img p{};
  std::array<bool, kMaxDegree> used{};
  std::vector<int> cycle;

  std::function<void()> next_cycle;
  std::function<void(int)> extend;
  extend = [&](int len) {
    if (static_cast<int>(cycle.size()) == len) {
      for (int k = 0; k < len; ++k)
        p[static_cast<std::size_t>(cycle[static_cast<std::size_t>(k)])] =
            static_cast<std::uint8_t>(cycle[static_cast<std::size_t>((k + 1) % len)]);
      next_cycle();
      return;
    }
    for (int j = cycle.front() + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
      extend(len);
      cycle.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  next_cycle = [&]() {
    int start = 0;
    while (start < n && used[static_cast<std::size_t>(start)]) ++start;
    if (start == n) {
      out.push_back(encode(p, n));
      return;
    }
    for (auto& [len, left] : lengths) {
      if (left == 0) continue;
      --left;
      used[static_cast<std::size_t>(start)] = true;
      std::vector<int> saved;
      saved.swap(cycle);
      cycle.push_back(start);
      extend(len);
      cycle.swap(saved);
      used[static_cast<std::size_t>(start)] = false;
      ++left;
    }
  };
  next_cycle();
}

// Fixed points first, then cycles of increasing length on consecutive points:
// the lexicographically least element of the class.
Img canonical_representative(const Partition& e, std::vector<std::vector<int>>& cycles) {
  auto parts = e.parts();
  std::sort(parts.begin(), parts.end());
  Img p{};
  int at = 0;
  for (Count len : parts) {
    std::vector<int> c;
    for (int k = 0; k < len; ++k) c.push_back(at + k);
    for (int k = 0; k < len; ++k)
      p[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])] =
          static_cast<std::uint8_t>(c[static_cast<std::size_t>((k + 1) % len)]);
    at += static_cast<int>(len);
    cycles.push_back(std::move(c));
  }
  return p;
}

// Rotations of each cycle and swaps of neighbouring cycles of equal length.
std::vector<Img> centralizer_generators(const std::vector<std::vector<int>>& cycles, int n) {
  Img id{};
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<Img> gens;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    if (cyc.size() > 1) {
      Img g = id;
      for (std::size_t k = 0; k < cyc.size(); ++k)
        g[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
      gens.push_back(g);
    }
    if (c + 1 < cycles.size() && cycles[c + 1].size() == cyc.size()) {
      Img g = id;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        g[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint8_t>(cycles[c + 1][k]);
        g[static_cast<std::size_t>(cycles[c + 1][k])] = static_cast<std::uint8_t>(cyc[k]);
      }
      gens.push_back(g);
    }
  }
  return gens;
}

bool transitive(const std::vector<Img>& gens, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = n;
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g[static_cast<std::size_t>(i)]);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  return components == 1;
}

Permutation to_perm(const Img& p, int n) {
  return Permutation(std::vector<int>(p.begin(), p.begin() + n));
}

}  // namespace

RefuteReport exhaustive_refute(const RamificationData& d, int degree_cap, const Caps& caps) {
  const Count n = d.degree();
  if (n > degree_cap || n > kMaxDegree)
    throw CapExceeded("exhaustive search at degree " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(std::min(degree_cap, kMaxDegree)));
  const auto& branches = d.branches();
  if (branches.size() > 4) throw DomainError("exhaustive search handles at most 4 branch points");
  RefuteReport report;
  const int deg = static_cast<int>(n);
  if (branches.size() < 2) return report;  // a single non-trivial element is never product-one

  // The determined last element gets the largest class, the fixed first
  // element the next largest.
  std::vector<BigInt> sizes;
  for (const auto& b : branches) {
    BigInt cent = 1;
    for (const auto& [part, mult] : b.runs()) {
      for (Count k = 0; k < mult; ++k) cent *= part;
      cent *= factorial(mult);
    }
    sizes.push_back(factorial(n) / cent);
  }
  std::vector<int> order(branches.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)]; });
  std::rotate(order.begin(), order.begin() + 1, order.end());
  report.order = order;
  const std::size_t r = order.size();
  auto branch = [&](std::size_t pos) -> const Partition& { return branches[static_cast<std::size_t>(order[pos])]; };

  std::vector<std::vector<int>> x1_cycles;
  const Img x1 = canonical_representative(branch(0), x1_cycles);
  const Img last_key = type_key(branch(r - 1));
  const BigInt half_full = factorial(n) / 2;

  auto consider = [&](const std::vector<Img>& head) {
    if (++report.tuples_examined > caps.search_work)
      throw CapExceeded("exhaustive search exceeded search_work=" + std::to_string(caps.search_work));
    Img prod = head.front();
    for (std::size_t i = 1; i < head.size(); ++i) prod = mul(prod, head[i], deg);
    Img last = inv(prod, deg);
    if (type_key(last, deg) != last_key) return;
    ++report.product_one;
    std::vector<Img> all = head;
    all.push_back(last);
    if (!transitive(all, deg)) return;
    ++report.transitive;
    std::vector<Permutation> perms;
    for (const auto& g : all) perms.push_back(to_perm(g, deg));
    BigInt ord = group_order(GeneratorSet(deg, perms), caps);
    ++report.transitive_orders[ramcover::to_string(ord)];
    if (ord >= half_full) {
      ++report.with_alt;
      if (!report.alt_example) report.alt_example = perms;
    }
  };

  if (r == 2) {
    consider({x1});
  } else {
    std::vector<std::uint64_t> cls2;
    enumerate_class(branch(1), deg, cls2);
    std::sort(cls2.begin(), cls2.end());
    std::vector<std::uint64_t> cls3;
    if (r == 4) enumerate_class(branch(2), deg, cls3);
    const auto cent = centralizer_generators(x1_cycles, deg);
    std::vector<bool> seen(cls2.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t start = 0; start < cls2.size(); ++start) {
      if (seen[start]) continue;
      // Mark the orbit of this element under the centralizer of x1.
      seen[start] = true;
      queue.assign(1, start);
      while (!queue.empty()) {
        Img y = decode(cls2[queue.back()], deg);
        queue.pop_back();
        for (const auto& g : cent) {
          auto code = encode(conj(y, g, deg), deg);
          auto idx = static_cast<std::size_t>(std::lower_bound(cls2.begin(), cls2.end(), code) - cls2.begin());
          if (!seen[idx]) {
            seen[idx] = true;
            queue.push_back(idx);
          }
        }
      }
      Img x2 = decode(cls2[start], deg);
      if (r == 3) {
        consider({x1, x2});
      } else {
        for (auto code : cls3) consider({x1, x2, decode(code, deg)});
      }
    }
  }
  report.realized_with_alt = report.with_alt > 0;
  return report;
}

}  // namespace ramcover
