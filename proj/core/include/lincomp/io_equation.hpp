#pragma once

#include <map>
#include <string>
#include <vector>

#include "lincomp/polynomial.hpp"

namespace lincomp {

/// Coefficients of u_j in the equation for one output.
///
/// `d` holds the net coefficients d_0..d_{n-1} as they appear in the
/// equation, i.e. (-1)^{out+j} times the raw minor det((lambda I - A)^{j,out}).
/// `sign` is that factor (-1)^{out+j}; the raw minor is sign * d. With this
/// convention every d_k is a sum of forest productivities and has only +1
/// coefficients.
struct RhsCoefficients {
  int sign = 1;
  std::vector<Polynomial> d;

  bool operator==(const RhsCoefficients&) const = default;
};

/// c_n y^(n) + ... + c_0 y = sum_j (d_{j,n-1} u_j^(n-1) + ... + d_{j,0} u_j)
/// for a single output y.
struct IoEquation {
  int out = 0;
  std::vector<Polynomial> lhs;              // c_0..c_n, c_n = 1
  std::map<int, RhsCoefficients> rhs;       // input j -> coefficients

  bool operator==(const IoEquation&) const = default;
};

/// Human-readable form, e.g. "y''' + (a12 + a21)*y'' + ... = u'' + ...".
/// Variables carry compartment subscripts (y1, u2) unless the model has a
/// single input and a single output (`plain_names`).
std::string render_equation(const IoEquation& eq, bool plain_names);

}  // namespace lincomp
