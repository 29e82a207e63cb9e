#pragma once

#include <string>
#include <vector>

#include "lincomp/auxgraphs.hpp"
#include "lincomp/io_equation.hpp"
#include "lincomp/model.hpp"
#include "lincomp/polynomial.hpp"

namespace lincomp {

/// det of (lambda I - M) restricted to the given rows and columns (1-based,
/// equal lengths). Laplace expansion along rows, memoized on the set of
/// columns already used. An empty selection has determinant 1.
LambdaPoly lambda_minor(const SymMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols);

/// Same determinant by the permutation (Leibniz) expansion. Only meant as an
/// independent cross-check for small sizes.
LambdaPoly lambda_minor_leibniz(const SymMatrix& m, const std::vector<int>& rows,
                                const std::vector<int>& cols);

/// det(lambda I - M).
LambdaPoly char_lambda_poly(const SymMatrix& m);

/// det((lambda I - M)^{drop_row, drop_col}).
LambdaPoly minor_lambda_poly(const SymMatrix& m, int drop_row, int drop_col);

/// Input-output equation for output `out` from determinants:
/// det(lambda I - A) y = sum_j (-1)^{out+j} det((lambda I - A)^{j,out}) u_j.
/// Throws std::invalid_argument if the model has no inputs or `out` is not
/// an output.
IoEquation io_equation(const Model& m, int out);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct MinorIdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  std::vector<std::string> failures() const;
};

/// Checks, by exact symbolic comparison:
///  - the three leaf-edge determinant identities relating m and m plus the
///    leaf 1 <-> n+1;
///  - lambda * det((lambda I - A)^{{1,i},{1,j}}) = det((lambda I - A*_1)^{i,j})
///    for all i, j != 1;
///  - det((lambda I - A)^{r,q}) = (-1)^{q+r} * forest sums over
///    F^{r,q}(G~*_q), for all r, q;
///  - F^{i,i}_j(G~*_i) and F_j(G~_i) have equal productivity sums, all i, j.
MinorIdentityReport check_minor_identities(const Model& m);

}  // namespace lincomp
