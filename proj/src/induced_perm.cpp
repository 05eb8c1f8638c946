#include <algorithm>
#include <numeric>

#include "ramcover/errors.hpp"
#include "ramcover/perm.hpp"

namespace ramcover {

namespace {

Count checked_domain(Count size, const Caps& caps, const char* what) {
  if (size > caps.induced_domain)
    throw CapExceeded(std::string(what) + " domain of size " + std::to_string(size) + " exceeds cap " +
                      std::to_string(caps.induced_domain));
  return size;
}

Count tset_domain(int d, int t, const Caps& caps) {
  if (t < 0 || t > d) throw DomainError("t=" + std::to_string(t) + " out of range for degree " + std::to_string(d));
  Count n;
  try {
    n = binomial(d, t);
  } catch (const std::overflow_error&) {
    throw CapExceeded("t-set domain overflows");
  }
  return checked_domain(n, caps, "t-set");
}

Count ttuple_domain(int d, int t, const Caps& caps) {
  if (t < 0 || t > d) throw DomainError("t=" + std::to_string(t) + " out of range for degree " + std::to_string(d));
  Count n;
  try {
    n = falling(d, t);
  } catch (const std::overflow_error&) {
    throw CapExceeded("t-tuple domain overflows");
  }
  return checked_domain(n, caps, "t-tuple");
}

// Rank of a tuple of distinct points in lexicographic order among all such
// tuples: mixed radix with digit i equal to the number of unused points below
// the entry.
Count ttuple_rank(const std::vector<int>& tuple, int d) {
  const int t = static_cast<int>(tuple.size());
  Count rank = 0;
  for (int i = 0; i < t; ++i) {
    int smaller_used = 0;
    for (int j = 0; j < i; ++j)
      if (tuple[static_cast<std::size_t>(j)] < tuple[static_cast<std::size_t>(i)]) ++smaller_used;
    rank = rank * (d - i) + (tuple[static_cast<std::size_t>(i)] - smaller_used);
  }
  return rank;
}

}  // namespace

Count tset_rank(const std::vector<int>& s) {
  Count r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i], static_cast<Count>(i + 1));
  return r;
}

Permutation induced_on_tsets(const Permutation& p, int t, const Caps& caps) {
  const int d = p.degree();
  const Count n = tset_domain(d, t, caps);
  std::vector<int> img(static_cast<std::size_t>(n));
  if (t == 0) return Permutation(1);
  // Enumerate subsets in colex order; the k-th subset generated has rank k.
  std::vector<int> c(static_cast<std::size_t>(t));
  std::iota(c.begin(), c.end(), 0);
  std::vector<int> image(static_cast<std::size_t>(t));
  for (Count k = 0; k < n; ++k) {
    for (int i = 0; i < t; ++i) image[static_cast<std::size_t>(i)] = p(c[static_cast<std::size_t>(i)]);
    std::sort(image.begin(), image.end());
    img[static_cast<std::size_t>(k)] = static_cast<int>(tset_rank(image));
    // Next subset in colex order.
    int j = 0;
    while (j + 1 < t && c[static_cast<std::size_t>(j)] + 1 == c[static_cast<std::size_t>(j + 1)]) ++j;
    ++c[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) c[static_cast<std::size_t>(i)] = i;
  }
  return Permutation(std::move(img));
}

Permutation induced_on_ttuples(const Permutation& p, int t, const Caps& caps) {
  const int d = p.degree();
  const Count n = ttuple_domain(d, t, caps);
  std::vector<int> img(static_cast<std::size_t>(n));
  if (t == 0) return Permutation(1);
  std::vector<int> tuple(static_cast<std::size_t>(t)), image(static_cast<std::size_t>(t));
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  Count k = 0;
  // Depth-first generation in lexicographic order.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == t) {
      for (int i = 0; i < t; ++i) image[static_cast<std::size_t>(i)] = p(tuple[static_cast<std::size_t>(i)]);
      img[static_cast<std::size_t>(k++)] = static_cast<int>(ttuple_rank(image, d));
      return;
    }
    for (int x = 0; x < d; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      tuple[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1);
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec(rec, 0);
  return Permutation(std::move(img));
}

namespace {

Count count_orbits(const std::vector<Permutation>& induced, Count n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  Count components = n;
  for (const auto& q : induced)
    for (int x = 0; x < static_cast<int>(n); ++x) {
      int a = find(x), b = find(q(x));
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  return components;
}

}  // namespace

Count orbit_count_on_tsets(const GeneratorSet& g, int t, const Caps& caps) {
  Count n = tset_domain(g.degree, t, caps);
  std::vector<Permutation> induced;
  for (const auto& p : g.gens) induced.push_back(induced_on_tsets(p, t, caps));
  return count_orbits(induced, n);
}

Count orbit_count_on_ttuples(const GeneratorSet& g, int t, const Caps& caps) {
  Count n = ttuple_domain(g.degree, t, caps);
  std::vector<Permutation> induced;
  for (const auto& p : g.gens) induced.push_back(induced_on_ttuples(p, t, caps));
  return count_orbits(induced, n);
}

}  // namespace ramcover
