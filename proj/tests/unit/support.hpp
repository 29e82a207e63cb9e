#pragma once

// Independent oracles for the unit tests. Nothing here calls into the code
// under test except for the data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <numeric>
#include <random>
#include <vector>

#include "lincomp/model.hpp"
#include "lincomp/polynomial.hpp"

namespace lincomp::testing {

// Reachability by Warshall's transitive closure.
inline std::vector<std::vector<bool>> closure(int n, const std::vector<Edge>& edges,
                                              const std::vector<int>& keep) {
  std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
  std::vector<bool> in(n + 1, false);
  for (int v : keep) in[v] = true;
  for (int v : keep) r[v][v] = true;
  for (const auto& e : edges) {
    if (in[e.from] && in[e.to]) r[e.from][e.to] = true;
  }
  for (int k : keep)
    for (int i : keep)
      for (int j : keep)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool sc_oracle(int n, const std::vector<Edge>& edges, const std::vector<int>& keep) {
  const auto r = closure(n, edges, keep);
  for (int i : keep)
    for (int j : keep)
      if (!r[i][j]) return false;
  return true;
}

inline bool sc_oracle(const Model& m) {
  std::vector<int> all(m.n());
  std::iota(all.begin(), all.end(), 1);
  return sc_oracle(m.n(), m.edges(), all);
}

// Tries every ordering that starts at root.
inline bool isc_oracle(const Model& m, int root) {
  std::vector<int> rest;
  for (int v = 1; v <= m.n(); ++v)
    if (v != root) rest.push_back(v);
  do {
    std::vector<int> prefix{root};
    bool ok = true;
    for (int v : rest) {
      prefix.push_back(v);
      if (!sc_oracle(m.n(), m.edges(), prefix)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_terms, int max_index = 3,
                                    int max_degree = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> idx(0, max_index);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-9, 9);
  Polynomial p;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<Monomial::Factor> f;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      int row = idx(rng);
      int col = 1 + idx(rng);
      f.push_back({Param{row, col}, 1u});
    }
    p.add_term(Monomial::from_factors(f), coef(rng));
  }
  return p;
}

// Arithmetic mod a prime below 2^61, written independently of PrimeField.
struct Mod {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, const Mod& f) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.sub(0, det);
    }
    det = f.mul(det, a[c][c]);
    const std::uint64_t iv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t factor = f.mul(a[r][c], iv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[c][k]));
    }
  }
  return det;
}

// Coefficients (ascending) of the polynomial of degree < xs.size()
// through the points (x, y), by Lagrange interpolation mod p.
inline std::vector<std::uint64_t> interpolate(const std::vector<std::uint64_t>& xs,
                                              const std::vector<std::uint64_t>& ys,
                                              const Mod& f) {
  const std::size_t n = xs.size();
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> basis{1};
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<std::uint64_t> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], basis[k]);
        next[k] = f.sub(next[k], f.mul(basis[k], xs[j]));
      }
      basis = next;
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    const std::uint64_t scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(basis[k], scale));
  }
  return out;
}

// Numeric A at a point: value[param] for each parameter of m.
inline std::vector<std::vector<std::uint64_t>> numeric_matrix(
    const Model& m, const std::map<Param, std::uint64_t>& value, const Mod& f) {
  const int n = m.n();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& e : m.edges()) {
    const std::uint64_t v = value.at(Param::edge(e.from, e.to));
    a[e.to - 1][e.from - 1] = f.add(a[e.to - 1][e.from - 1], v);
    a[e.from - 1][e.from - 1] = f.sub(a[e.from - 1][e.from - 1], v);
  }
  for (int l : m.leaks()) {
    a[l - 1][l - 1] = f.sub(a[l - 1][l - 1], value.at(Param::leak(l)));
  }
  return a;
}

// Coefficients of det((lambda I - A) with row drop_row and column drop_col
// removed), or of the full determinant when drop_row == 0.
inline std::vector<std::uint64_t> numeric_minor_poly(
    const std::vector<std::vector<std::uint64_t>>& a, int drop_row, int drop_col,
    const Mod& f) {
  const int n = static_cast<int>(a.size());
  const int size = drop_row ? n - 1 : n;
  std::vector<std::uint64_t> xs, ys;
  for (int t = 0; t <= size; ++t) {
    const std::uint64_t lam = 1000 + t;
    std::vector<std::vector<std::uint64_t>> b;
    for (int i = 0; i < n; ++i) {
      if (i + 1 == drop_row) continue;
      std::vector<std::uint64_t> row;
      for (int j = 0; j < n; ++j) {
        if (drop_row && j + 1 == drop_col) continue;
        std::uint64_t v = f.sub(0, a[i][j]);
        if (i == j) v = f.add(v, lam);
        row.push_back(v);
      }
      b.push_back(row);
    }
    xs.push_back(lam);
    ys.push_back(det_mod(b, f));
  }
  return interpolate(xs, ys, f);
}

// Independent polynomial evaluation mod p.
inline std::uint64_t eval_oracle(const Polynomial& poly, const std::map<Param, std::uint64_t>& v,
                                 const Mod& f) {
  std::uint64_t total = 0;
  for (const auto& [mono, c] : poly.terms()) {
    mpz_class r = c % mpz_class(std::to_string(f.p));
    if (r < 0) r += mpz_class(std::to_string(f.p));
    std::uint64_t term = std::stoull(r.get_str());
    for (const auto& [x, e] : mono.factors())
      for (unsigned k = 0; k < e; ++k) term = f.mul(term, v.at(x));
    total = f.add(total, term);
  }
  return total;
}

}  // namespace lincomp::testing
