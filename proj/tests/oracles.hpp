#pragma once
// Brute-force reference implementations for the tests. Deliberately naive and
// independent of the library: plain image vectors, std::set closures, no
// closed forms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using P = std::vector<int>;  // images of 0..n-1
using Type = std::vector<long long>;  // cycle lengths, descending

inline P identity(int n) {
  P p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Left to right: first p, then q.
inline P mul(const P& p, const P& q) {
  P r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline P inv(const P& p) {
  P r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline Type cycle_type(const P& p) {
  std::vector<bool> seen(p.size());
  Type t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

// Cycles on consecutive points in the given order.
inline P from_type(const Type& type) {
  int n = 0;
  for (auto x : type) n += static_cast<int>(x);
  P p = identity(n);
  int at = 0;
  for (auto len : type) {
    for (int k = 0; k < len; ++k) p[static_cast<std::size_t>(at + k)] = at + static_cast<int>((k + 1) % len);
    at += static_cast<int>(len);
  }
  return p;
}

inline P random_perm(int n, std::mt19937_64& rng) {
  P p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// A random element of the given cycle type.
inline P random_of_type(const Type& type, std::mt19937_64& rng) {
  P base = from_type(type);
  P g = random_perm(static_cast<int>(base.size()), rng);
  return mul(mul(inv(g), base), g);
}

// All partitions of n, descending.
inline std::vector<Type> partitions(long long n) {
  std::vector<Type> out;
  Type cur;
  std::function<void(long long, long long)> rec = [&](long long left, long long cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Induced permutation on t-subsets (as sorted vectors) or ordered t-tuples of
// distinct points, returned as its cycle type.
inline Type induced_type(const P& p, int t, bool ordered) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> dom;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == t) {
      dom.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
      if (!ordered && !cur.empty() && i < cur.back()) continue;
      cur.push_back(i);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < dom.size(); ++i) index[dom[i]] = static_cast<int>(i);
  P q(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::vector<int> img;
    for (int x : dom[i]) img.push_back(p[static_cast<std::size_t>(x)]);
    if (!ordered) std::sort(img.begin(), img.end());
    q[i] = index.at(img);
  }
  return cycle_type(q);
}

// Every element of <gens>, by closure.
inline std::set<P> group(const std::vector<P>& gens) {
  std::set<P> g = {identity(static_cast<int>(gens.front().size()))};
  std::vector<P> frontier(g.begin(), g.end());
  while (!frontier.empty()) {
    std::vector<P> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        P y = mul(x, s);
        if (g.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return g;
}

inline std::vector<std::set<int>> orbits(const std::vector<P>& gens) {
  const int n = static_cast<int>(gens.front().size());
  std::vector<std::set<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::set<int> orb = {s};
    std::vector<int> stack = {s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        int y = g[static_cast<std::size_t>(x)];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          orb.insert(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(orb);
  }
  return out;
}

inline bool transitive(const std::vector<P>& gens) { return orbits(gens).size() == 1; }

// Primitivity from the whole group: the block system generated by {0,b} is
// the finest partition in which g(0) ~ g(b) for every element g.
inline bool primitive(const std::vector<P>& gens) {
  const int n = static_cast<int>(gens.front().size());
  if (!transitive(gens)) return false;
  auto all = group(gens);
  for (int b = 1; b < n; ++b) {
    std::vector<int> cls(static_cast<std::size_t>(n));
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) { return cls[static_cast<std::size_t>(x)] == x ? x : cls[static_cast<std::size_t>(x)] = find(cls[static_cast<std::size_t>(x)]); };
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : all)
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y)
            if (find(x) == find(y)) {
              int a = find(g[static_cast<std::size_t>(x)]), c = find(g[static_cast<std::size_t>(y)]);
              if (a != c) {
                cls[static_cast<std::size_t>(a)] = c;
                changed = true;
              }
            }
      int a = find(0), c = find(b);
      if (a != c) {
        cls[static_cast<std::size_t>(a)] = c;
        changed = true;
      }
    }
    std::set<int> block;
    for (int x = 0; x < n; ++x)
      if (find(x) == find(0)) block.insert(x);
    if (static_cast<int>(block.size()) < n) return false;
  }
  return true;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long falling(long long n, long long k) {
  long long f = 1;
  for (long long i = 0; i < k; ++i) f *= n - i;
  return f;
}

inline long long parts_sum_minus_count(const Type& t) {
  long long s = 0;
  for (auto x : t) s += x - 1;
  return s;
}

// 2g - 2 = -2n + sum (n - #parts): returns 2g, so odd means non-integral.
inline long long twice_genus(long long n, const std::vector<Type>& branches) {
  long long r = 0;
  for (const auto& b : branches) r += parts_sum_minus_count(b);
  return r - 2 * n + 2;
}

// R_{h_1^t} by orbit counting on t-tuples: for each point fixed as first
// coordinate, count cycles of <p> on tuples; the deficit against the
// unramified count is the ramification.
inline long long r_h1t(const P& p, int t) {
  const long long n = static_cast<long long>(p.size());
  long long tuples = static_cast<long long>(induced_type(p, t, true).size());
  long long points = static_cast<long long>(cycle_type(p).size());
  return falling(n - 1, t - 1) * points - tuples;
}

// R_{h_t} - t! R_{f_t}.
inline long long r_pit(const P& p, int t) {
  const long long n = static_cast<long long>(p.size());
  long long rh = falling(n, t) - static_cast<long long>(induced_type(p, t, true).size());
  long long binom = falling(n, t) / factorial(t);
  long long rf = binom - static_cast<long long>(induced_type(p, t, false).size());
  return rh - factorial(t) * rf;
}

// Every element with the given cycle type.
inline std::vector<P> conjugacy_class(const Type& type) {
  P base = from_type(type);
  const int n = static_cast<int>(base.size());
  std::set<P> out;
  P g = identity(n);
  do {
    out.insert(mul(mul(inv(g), base), g));
  } while (std::next_permutation(g.begin(), g.end()));
  return {out.begin(), out.end()};
}

struct SearchResult {
  long long product_one = 0;  // all tuples, no symmetry reduction
  long long transitive = 0;
  long long with_alt = 0;
  std::set<long long> orders;  // orders of transitive tuples
};

// Every tuple x1..x_r (r = 2, 3 or 4) with x1...x_r = 1 and the given types.
inline SearchResult naive_search(const std::vector<Type>& types) {
  SearchResult res;
  const int n = static_cast<int>(from_type(types.front()).size());
  std::vector<std::vector<P>> classes;
  for (std::size_t i = 0; i + 1 < types.size(); ++i) classes.push_back(conjugacy_class(types[i]));
  const Type last = types.back();
  std::vector<P> head;
  std::function<void(std::size_t, const P&)> rec = [&](std::size_t i, const P& prod) {
    if (i == classes.size()) {
      P x = inv(prod);
      if (cycle_type(x) != last) return;
      ++res.product_one;
      std::vector<P> gens = head;
      gens.push_back(x);
      if (!transitive(gens)) return;
      ++res.transitive;
      long long ord = static_cast<long long>(group(gens).size());
      res.orders.insert(ord);
      if (2 * ord >= factorial(n)) ++res.with_alt;
      return;
    }
    for (const auto& x : classes[i]) {
      head.push_back(x);
      rec(i + 1, mul(prod, x));
      head.pop_back();
    }
  };
  rec(0, identity(n));
  return res;
}

}  // namespace oracle
