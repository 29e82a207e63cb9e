#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lincomp/corpus.hpp"
#include "lincomp/det_oracle.hpp"
#include "lincomp/forestcalc.hpp"
#include "support.hpp"

using namespace lincomp;

namespace {

Model figure1() {
  return Model(3, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, {1}, {1}, {2});
}

Polynomial p(const std::string& s) { return parse_polynomial(s); }

std::vector<int> range(int n, int skip = 0) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

}  // namespace

TEST(LambdaMinor, LaplaceMatchesLeibniz) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m.at(i, j) = lincomp::testing::random_polynomial(rng, 3, 2, 1);
    EXPECT_EQ(lambda_minor(m, range(n), range(n)), lambda_minor_leibniz(m, range(n), range(n)));
    const int r = 1 + static_cast<int>(rng() % n);
    const int c = 1 + static_cast<int>(rng() % n);
    EXPECT_EQ(lambda_minor(m, range(n, r), range(n, c)),
              lambda_minor_leibniz(m, range(n, r), range(n, c)));
  }
}

TEST(CharPoly, Examples) {
  const LambdaPoly chi = char_lambda_poly(compartmental_matrix(figure1()));
  ASSERT_EQ(chi.degree(), 3);
  EXPECT_EQ(chi.coefficient(3), Polynomial::constant(1));
  EXPECT_EQ(chi.coefficient(2).to_string(), "a02 + a12 + a13 + a21 + a23 + a31 + a32");
  EXPECT_EQ(chi.coefficient(1).term_count(), 13u);
  EXPECT_EQ(chi.coefficient(0).to_string(), "a02*a13*a21 + a02*a21*a23 + a02*a23*a31");

  const LambdaPoly zero = char_lambda_poly(SymMatrix(4));
  EXPECT_EQ(zero.degree(), 4);
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(zero.coefficient(k).is_zero());

  const LambdaPoly leak = char_lambda_poly(compartmental_matrix(Model(1, {}, {1}, {1}, {1})));
  EXPECT_EQ(leak, LambdaPoly::monic_linear(p("a01")));
}

TEST(Minor, Examples) {
  const LambdaPoly m11 = minor_lambda_poly(compartmental_matrix(figure1()), 1, 1);
  EXPECT_EQ(m11.coefficient(2), Polynomial::constant(1));
  EXPECT_EQ(m11.coefficient(1), p("a02 + a12 + a13 + a23 + a32"));
  EXPECT_EQ(m11.coefficient(0), p("a02*a13 + a12*a13 + a02*a23 + a12*a23 + a13*a32"));

  EXPECT_EQ(minor_lambda_poly(compartmental_matrix(catenary(2, {1}, {1}, {})), 1, 1),
            LambdaPoly::monic_linear(p("a12")));

  const Model diag(3, {}, {1}, {1}, {1, 2, 3});
  EXPECT_EQ(minor_lambda_poly(compartmental_matrix(diag), 2, 2),
            LambdaPoly::monic_linear(p("a01")) * LambdaPoly::monic_linear(p("a03")));
}

TEST(IoEquation, Catenary2CrossTerm) {
  const Model cat = catenary(2, {1}, {2}, {});
  EXPECT_EQ(minor_lambda_poly(compartmental_matrix(cat), 1, 2), LambdaPoly::constant(-p("a21")));
  const IoEquation eq = io_equation(cat, 2);
  ASSERT_EQ(eq.lhs.size(), 3u);
  EXPECT_EQ(eq.lhs[2], Polynomial::constant(1));
  EXPECT_EQ(eq.lhs[1], p("a12 + a21"));
  EXPECT_TRUE(eq.lhs[0].is_zero());
  const RhsCoefficients& r = eq.rhs.at(1);
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.d[0], p("a21"));
  EXPECT_TRUE(r.d[1].is_zero());
}

TEST(IoEquation, OneCompartmentAndErrors) {
  const Model one(1, {}, {1}, {1}, {});
  EXPECT_EQ(render_equation(io_equation(one, 1), true), "y' = u");
  EXPECT_THROW(io_equation(Model(2, {{1, 2}, {2, 1}}, {}, {1}, {}), 1), std::invalid_argument);
  EXPECT_THROW(io_equation(catenary(2, {1}, {2}, {}), 1), std::invalid_argument);
}

TEST(IoEquation, Figure1Rendering) {
  const std::string text = render_equation(io_equation(figure1(), 1), true);
  EXPECT_EQ(text.rfind("y''' + (a02 + a12 + a13 + a21 + a23 + a31 + a32)*y'' + (", 0), 0u);
  EXPECT_NE(text.find("= u'' + (a02 + a12 + a13 + a23 + a32)*u' + ("), std::string::npos);
}

TEST(IoEquation, EqualsForestFormulas) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    const Model m = random_strongly_connected(rng, {});
    for (int out = 1; out <= m.n(); ++out) {
      const Model probe(m.n(), m.edges(), range(m.n()), {out}, m.leaks());
      EXPECT_EQ(io_equation(probe, out), forest_io_equation(probe, out))
          << serialize_model(probe, -1);
    }
  }
}

TEST(IoEquation, MatchesNumericDeterminants) {
  // Third route: numeric determinants at random points, interpolated in lambda.
  std::mt19937_64 rng(59);
  for (int t = 0; t < 60; ++t) {
    const Model m = random_strongly_connected(rng, {});
    const std::uint64_t prime = kTrialPrimes[t % 3];
    const lincomp::testing::Mod f{prime};
    std::map<Param, std::uint64_t> values;
    for (const Param& x : param_vector(m)) values[x] = 1 + rng() % (prime - 1);
    const auto a = lincomp::testing::numeric_matrix(m, values, f);

    const auto chi = lincomp::testing::numeric_minor_poly(a, 0, 0, f);
    const auto c = lhs_coefficients(m);
    for (int k = 0; k < m.n(); ++k) {
      EXPECT_EQ(lincomp::testing::eval_oracle(c[k], values, f), chi[k]);
    }
    for (int r = 1; r <= m.n(); ++r) {
      for (int q = 1; q <= m.n(); ++q) {
        const auto minor = lincomp::testing::numeric_minor_poly(a, r, q, f);
        // raw minor det((lambda I - A)^{r,q}) = sign * d, with d from forests.
        const RhsCoefficients rhs = rhs_coefficients(m, q, r);
        for (int k = 0; k < m.n(); ++k) {
          std::uint64_t d = lincomp::testing::eval_oracle(rhs.d[k], values, f);
          if (rhs.sign < 0) d = f.sub(0, d);
          EXPECT_EQ(d, minor[k]) << serialize_model(m, -1) << " r=" << r << " q=" << q;
        }
      }
    }
  }
}

TEST(MinorIdentities, Figure3Models) {
  const Model m(3, {{2, 1}, {1, 2}, {2, 3}, {3, 1}}, {1}, {1}, {});
  const auto report = check_minor_identities(m);
  EXPECT_TRUE(report.all_hold()) << ::testing::PrintToString(report.failures());
  EXPECT_GT(report.checks.size(), 5u);
}

TEST(MinorIdentities, RandomLeaklessModels) {
  std::mt19937_64 rng(61);
  RandomModelOptions opts;
  opts.max_n = 4;
  opts.in_equals_out_at_1_leakless = true;
  for (int t = 0; t < 30; ++t) {
    const Model m = random_strongly_connected(rng, opts);
    const auto report = check_minor_identities(m);
    EXPECT_TRUE(report.all_hold()) << serialize_model(m, -1);
  }
}
