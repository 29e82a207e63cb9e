#include "lincomp/det_oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "lincomp/forestcalc.hpp"

namespace lincomp {

namespace {

// Entry (r, c) of lambda I - M.
LambdaPoly shifted_entry(const SymMatrix& m, int r, int c) {
  if (r == c) return LambdaPoly::monic_linear(-m.at(r, c));
  return LambdaPoly::constant(-m.at(r, c));
}

void check_selection(const SymMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("minor needs as many rows as columns");
  }
  if (rows.size() > 20) {
    throw std::length_error("minor larger than 20x20");
  }
  for (int idx : rows) {
    if (idx < 1 || idx > m.size()) throw std::out_of_range("minor row out of range");
  }
  for (int idx : cols) {
    if (idx < 1 || idx > m.size()) throw std::out_of_range("minor column out of range");
  }
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

std::vector<int> all_but(int n, int a, int b) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (v != a && v != b) out.push_back(v);
  }
  return out;
}

}  // namespace

LambdaPoly lambda_minor(const SymMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  check_selection(m, rows, cols);
  const std::size_t k = rows.size();
  std::vector<LambdaPoly> entry(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      entry[r * k + c] = shifted_entry(m, rows[r], cols[c]);
    }
  }
  // memo[mask]: determinant of rows popcount(mask).. against the columns
  // not in mask.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::optional<LambdaPoly>> memo(full + 1);
  memo[full] = LambdaPoly::constant(Polynomial::constant(1));

  auto det = [&](auto&& self, std::size_t mask) -> const LambdaPoly& {
    if (memo[mask]) return *memo[mask];
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    LambdaPoly total;
    int position = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const LambdaPoly& a = entry[row * k + c];
      if (!a.is_zero()) {
        const LambdaPoly& rest = self(self, mask | (std::size_t{1} << c));
        if (!rest.is_zero()) {
          if (position % 2 == 0) {
            total += a * rest;
          } else {
            total -= a * rest;
          }
        }
      }
      ++position;
    }
    memo[mask] = std::move(total);
    return *memo[mask];
  };
  return det(det, 0);
}

LambdaPoly lambda_minor_leibniz(const SymMatrix& m, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  check_selection(m, rows, cols);
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  LambdaPoly total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    LambdaPoly term = LambdaPoly::constant(Polynomial::constant(1));
    for (std::size_t r = 0; r < k && !term.is_zero(); ++r) {
      term = term * shifted_entry(m, rows[r], cols[perm[r]]);
    }
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

LambdaPoly char_lambda_poly(const SymMatrix& m) {
  const auto idx = all_but(m.size(), 0);
  return lambda_minor(m, idx, idx);
}

LambdaPoly minor_lambda_poly(const SymMatrix& m, int drop_row, int drop_col) {
  if (drop_row < 1 || drop_row > m.size() || drop_col < 1 || drop_col > m.size()) {
    throw std::out_of_range("minor index out of range");
  }
  return lambda_minor(m, all_but(m.size(), drop_row), all_but(m.size(), drop_col));
}

IoEquation io_equation(const Model& m, int out) {
  if (m.inputs().empty()) {
    throw std::invalid_argument("model has no inputs");
  }
  if (!m.is_output(out)) {
    throw std::invalid_argument("compartment " + std::to_string(out) +
                                " is not an output");
  }
  const int n = m.n();
  const SymMatrix a = compartmental_matrix(m);
  IoEquation eq;
  eq.out = out;
  const LambdaPoly lhs = char_lambda_poly(a);
  for (int k = 0; k <= n; ++k) eq.lhs.push_back(lhs.coefficient(k));
  for (int j : m.inputs()) {
    RhsCoefficients r;
    r.sign = (out + j) % 2 == 0 ? 1 : -1;
    const LambdaPoly minor = minor_lambda_poly(a, j, out);
    for (int k = 0; k < n; ++k) {
      r.d.push_back(r.sign > 0 ? minor.coefficient(k) : -minor.coefficient(k));
    }
    eq.rhs[j] = std::move(r);
  }
  return eq;
}

bool MinorIdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.holds; });
}

std::vector<std::string> MinorIdentityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c.name);
  }
  return out;
}

MinorIdentityReport check_minor_identities(const Model& m) {
  MinorIdentityReport report;
  const int n = m.n();
  const SymMatrix a = compartmental_matrix(m);
  const LambdaPoly lambda = LambdaPoly({Polynomial{}, Polynomial::constant(1)});

  // Leaf identities: m' = m plus 1 <-> N with N = n + 1.
  {
    const int big = n + 1;
    std::vector<Edge> edges = m.edges();
    edges.push_back({1, big});
    edges.push_back({big, 1});
    const Model leafed(big, std::move(edges), m.inputs(), m.outputs(), m.leaks());
    const SymMatrix star = compartmental_matrix(leafed);
    const Polynomial a_1n = Polynomial::variable(Param::edge(big, 1));
    const Polynomial a_n1 = Polynomial::variable(Param::edge(1, big));
    const LambdaPoly det_a = char_lambda_poly(a);
    const LambdaPoly det_a11 = minor_lambda_poly(a, 1, 1);
    const int sign = (big - 1) % 2 == 0 ? 1 : -1;
    const Polynomial signed_one = Polynomial::constant(sign);

    const LambdaPoly rhs1 = lambda * det_a + det_a.scaled(a_1n) +
                            (lambda * det_a11).scaled(a_n1);
    report.checks.push_back({"leaf: det(lambda I - A*) expansion",
                             char_lambda_poly(star) == rhs1});
    report.checks.push_back(
        {"leaf: minor (1,N) of A*",
         minor_lambda_poly(star, 1, big) == det_a11.scaled(a_n1 * signed_one)});
    report.checks.push_back(
        {"leaf: minor (N,1) of A*",
         minor_lambda_poly(star, big, 1) == det_a11.scaled(a_1n * signed_one)});
  }

  // Removing row and column 1 versus zeroing column 1.
  {
    const SymMatrix star1 = star_matrix(m, 1);
    bool holds = true;
    for (int i = 2; i <= n && holds; ++i) {
      for (int j = 2; j <= n && holds; ++j) {
        const LambdaPoly lhs = lambda * lambda_minor(a, all_but(n, 1, i), all_but(n, 1, j));
        holds = lhs == minor_lambda_poly(star1, i, j);
      }
    }
    report.checks.push_back({"remove row/column 1 vs zeroed column 1", holds});
  }

  // Raw minors against signed forest sums, every (r, q).
  {
    bool holds = true;
    for (int r = 1; r <= n && holds; ++r) {
      for (int q = 1; q <= n && holds; ++q) {
        const LambdaPoly minor = minor_lambda_poly(a, r, q);
        const RhsCoefficients forests = rhs_coefficients(m, q, r);
        for (int k = 0; k < n && holds; ++k) {
          const Polynomial expected = forests.sign > 0 ? forests.d[k] : -forests.d[k];
          holds = minor.coefficient(k) == expected;
        }
        holds = holds && minor.degree() < n;
      }
    }
    report.checks.push_back({"minor (r,q) equals signed forest sum", holds});
  }

  // Forests of G~*_i through i versus forests of the multigraph G~_i.
  {
    bool holds = true;
    for (int i = 1; i <= n && holds; ++i) {
      const auto star_sums = forest_sums(strip_outgoing(m, i), std::make_pair(i, i));
      const auto multi_sums = forest_sums(flip_into_leak(m, i));
      for (std::size_t j = 1; j < star_sums.size() && holds; ++j) {
        const Polynomial other = j < multi_sums.size() ? multi_sums[j] : Polynomial{};
        holds = star_sums[j] == other;
      }
    }
    report.checks.push_back({"forests through i in G~*_i equal forests of G~_i", holds});
  }
  return report;
}

}  // namespace lincomp
