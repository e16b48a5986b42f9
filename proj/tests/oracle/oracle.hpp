#pragma once

// Independent reference computations for the tests. Nothing here uses the
// library's linear algebra: dense elimination, minors, and the full tensor
// algebra in place of path words.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<long>>;

// Rank over Q (p == 0) or F_p by plain dense Gaussian elimination.
inline std::size_t dense_rank(Dense m, long p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  if (p == 0) {
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        mpq_class f = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      }
      ++rank;
    }
    return rank;
  }
  auto mod = [p](long v) { return ((v % p) + p) % p; };
  auto inv = [&](long v) {
    long r = 1, b = mod(v), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& v : row) v = mod(v);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long f = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

inline mpz_class determinant(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    mpz_class term = a[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
// d_k = D_k / D_{k-1}. Exponential; for matrices up to about 5 x 5.
inline std::vector<mpz_class> invariant_factors(const Dense& m) {
  std::vector<mpz_class> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    combinations(rows, k, [&](const std::vector<std::size_t>& rs) {
      combinations(cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        mpz_class d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// A cell complex as plain data: dims and signed boundaries by position.
struct Cells {
  std::vector<int> dim;
  std::vector<std::map<std::size_t, int>> boundary;  // face position -> sign
};

// Cellular cohomology dims via dense coboundary ranks.
inline std::vector<std::size_t> cellular_cohomology(const Cells& x, long p) {
  int top = -1;
  for (int d : x.dim) top = std::max(top, d);
  std::vector<std::vector<std::size_t>> by_dim(top + 1);
  for (std::size_t c = 0; c < x.dim.size(); ++c) by_dim[x.dim[c]].push_back(c);
  std::vector<std::size_t> rank(top + 2, 0);  // rank[n] = rank of delta: C^{n-1} -> C^n
  for (int n = 1; n <= top; ++n) {
    Dense m(by_dim[n].size(), std::vector<long>(by_dim[n - 1].size(), 0));
    for (std::size_t i = 0; i < by_dim[n].size(); ++i)
      for (std::size_t j = 0; j < by_dim[n - 1].size(); ++j) {
        auto it = x.boundary[by_dim[n][i]].find(by_dim[n - 1][j]);
        if (it != x.boundary[by_dim[n][i]].end()) m[i][j] = it->second;
      }
    rank[n] = dense_rank(m, p);
  }
  std::vector<std::size_t> out;
  for (int n = 0; n <= top; ++n) out.push_back(by_dim[n].size() - rank[n] - rank[n + 1]);
  return out;
}

// A ranked poset as plain data; vertex 0 is the minimum.
struct Poset {
  std::vector<int> rank;
  std::vector<std::vector<std::size_t>> lower;  // lower covers
};

// dim R_m computed in the full tensor algebra on the generators (every
// vertex but the minimum): R_m = W^{(x)m} / sum_i W^i (x) I_2 (x) W^{m-2-i}.
inline std::size_t dual_algebra_dim(const Poset& g, std::size_t m, long p) {
  std::vector<std::size_t> gens;
  for (std::size_t v = 1; v < g.rank.size(); ++v) gens.push_back(v);
  const std::size_t n = gens.size();
  if (m == 0) return 1;
  if (m == 1) return n;
  std::vector<std::size_t> pos(g.rank.size(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[gens[i]] = i;
  // Quadratic relations as vectors over W (x) W, index a * n + b.
  std::vector<std::map<std::size_t, long>> quad;
  for (std::size_t x : gens) {
    const auto& s = g.lower[x];
    for (std::size_t y : gens) {
      if (std::find(s.begin(), s.end(), y) == s.end()) quad.push_back({{pos[x] * n + pos[y], 1}});
    }
    if (g.rank[x] >= 2) {
      std::map<std::size_t, long> rel;
      for (std::size_t c : s) rel[pos[x] * n + pos[c]] += 1;
      quad.push_back(rel);
    }
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  std::size_t before = 1;
  Dense rows;
  for (std::size_t i = 0; i + 2 <= m; ++i) {
    std::size_t after = total / (before * n * n);
    for (std::size_t u = 0; u < before; ++u)
      for (const auto& rel : quad)
        for (std::size_t v = 0; v < after; ++v) {
          std::vector<long> row(total, 0);
          for (const auto& [ab, c] : rel) row[(u * n * n + ab) * after + v] += c;
          rows.push_back(std::move(row));
        }
    before *= n;
  }
  return total - dense_rank(rows, p);
}

// Random layered graph of rank <= max_rank in which every vertex's lower
// covers are connected under "share a lower cover" (so the graph is uniform).
inline Poset random_uniform_poset(std::mt19937& rng, int max_rank) {
  Poset g;
  g.rank.push_back(0);
  g.lower.emplace_back();
  std::vector<std::vector<std::size_t>> layer{{0}};
  std::uniform_int_distribution<int> count(1, 3);
  for (int r = 1; r <= max_rank; ++r) {
    std::vector<std::size_t> current;
    const auto& below = layer.back();
    int how_many = r == 1 ? count(rng) + 1 : count(rng);
    for (int i = 0; i < how_many; ++i) {
      std::vector<std::size_t> covers;
      if (r == 1) {
        covers = {0};
      } else {
        // Grow a connected set of lower covers from a random seed.
        std::set<std::size_t> chosen{below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)]};
        int target = std::uniform_int_distribution<int>(1, static_cast<int>(below.size()))(rng);
        for (int step = 0; step < 8 && static_cast<int>(chosen.size()) < target; ++step) {
          std::vector<std::size_t> frontier;
          for (std::size_t b : below) {
            if (chosen.count(b)) continue;
            bool linked = false;
            for (std::size_t a : chosen)
              for (std::size_t la : g.lower[a])
                if (std::find(g.lower[b].begin(), g.lower[b].end(), la) != g.lower[b].end()) linked = true;
            if (linked) frontier.push_back(b);
          }
          if (frontier.empty()) break;
          chosen.insert(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
        }
        covers.assign(chosen.begin(), chosen.end());
      }
      g.rank.push_back(r);
      g.lower.push_back(covers);
      current.push_back(g.rank.size() - 1);
    }
    layer.push_back(current);
  }
  return g;
}

}  // namespace oracle
