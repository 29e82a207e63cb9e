#include "lincomp/io_equation.hpp"

namespace lincomp {

namespace {

std::string derivative(const std::string& var, int k) {
  if (k <= 3) return var + std::string(static_cast<std::size_t>(k), '\'');
  return var + "^(" + std::to_string(k) + ")";
}

// Appends coeff*var^(k) terms, highest order first. Returns "0" if all vanish.
std::string render_side(const std::vector<Polynomial>& coeffs,
                        const std::string& var) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Polynomial& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = false;
    if (c.term_count() == 1 && text.front() == '-') {
      negative = true;
      text.erase(0, 1);
    }
    std::string term;
    if (text == "1") {
      term = derivative(var, k);
    } else if (c.term_count() == 1) {
      term = text + "*" + derivative(var, k);
    } else {
      term = "(" + text + ")*" + derivative(var, k);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_equation(const IoEquation& eq, bool plain_names) {
  const std::string y = plain_names ? "y" : "y" + std::to_string(eq.out);
  std::string rhs;
  for (const auto& [j, coeffs] : eq.rhs) {
    const std::string u = plain_names ? "u" : "u" + std::to_string(j);
    const std::string part = render_side(coeffs.d, u);
    if (part == "0") continue;
    if (rhs.empty()) {
      rhs = part;
    } else if (part.front() == '-') {
      rhs += " - " + part.substr(1);
    } else {
      rhs += " + " + part;
    }
  }
  if (rhs.empty()) rhs = "0";
  return render_side(eq.lhs, y) + " = " + rhs;
}

}  // namespace lincomp
