#include "lincomp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lincomp {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [p, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == p) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(p, e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(Param p) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), p,
      [](const Factor& f, const Param& q) { return f.first < q; });
  return it != factors_.end() && it->first == p ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += p.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Equal degree: compare the expanded factor sequences. At the first
  // differing factor pair, a smaller parameter wins; for the same parameter,
  // the larger exponent wins (the other sequence continues with a larger
  // parameter, since total degrees agree).
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t len = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const mpz_class& c) {
  return term(Monomial{}, c);
}

Polynomial Polynomial::variable(Param p) { return term(Monomial(p), 1); }

Polynomial Polynomial::term(Monomial m, const mpz_class& c) {
  Polynomial out;
  if (c != 0) out.terms_.emplace(std::move(m), c);
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  // Terms are stored highest degree first.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

std::optional<mpz_class> Polynomial::constant_value() const {
  if (terms_.empty()) return mpz_class(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::set<Param> Polynomial::variables() const {
  std::set<Param> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, Param x) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(x);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& f : factors) {
      if (f.first == x) f.second -= 1;
    }
    out.add_term(Monomial::from_factors(std::move(factors)), c * e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = parse_term();
      out.add_term(m, c * sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Monomial, mpz_class> parse_term() {
    mpz_class coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= mpz_class(parse_digits());
      } else if (peek() == 'a') {
        ++pos_;
        const Param p = parse_param_suffix();
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<unsigned>(std::stoul(parse_digits()));
        }
        factors.emplace_back(p, e);
      } else {
        fail("expected a coefficient or parameter");
      }
      skip();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return {Monomial::from_factors(std::move(factors)), coeff};
  }

  Param parse_param_suffix() {
    const std::string digits = parse_digits();
    if (peek() == '_') {
      ++pos_;
      const std::string col = parse_digits();
      return Param{std::stoi(digits), std::stoi(col)};
    }
    if (digits.size() != 2) fail("ambiguous parameter name a" + digits);
    return Param{digits[0] - '0', digits[1] - '0'};
  }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " +
                                std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  return PolyParser(text).parse();
}

// ---------------------------------------------------------------------------
// LambdaPoly

LambdaPoly::LambdaPoly(std::vector<Polynomial> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

LambdaPoly LambdaPoly::constant(Polynomial c) {
  return LambdaPoly(std::vector<Polynomial>{std::move(c)});
}

LambdaPoly LambdaPoly::monic_linear(Polynomial c) {
  return LambdaPoly({std::move(c), Polynomial::constant(1)});
}

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial LambdaPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Polynomial{};
  return coeffs_[k];
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LambdaPoly LambdaPoly::scaled(const Polynomial& c) const {
  std::vector<Polynomial> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Polynomial> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return LambdaPoly(std::move(out));
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LambdaPoly(std::move(out));
}

std::string LambdaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Polynomial& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string lam = k == 0 ? "" : (k == 1 ? "L" : "L^" + std::to_string(k));
    if (lam.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c == Polynomial::constant(1)) {
      out += lam;
    } else {
      out += "(" + c.to_string() + ")*" + lam;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prime fields

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t result = 1;
  base %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::reduce(const mpz_class& c) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
  return r.get_ui();
}

std::uint64_t eval_mod(const Polynomial& p, const FieldPoint& pt) {
  const PrimeField field(pt.prime);
  std::uint64_t total = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t value = field.reduce(c);
    for (const auto& [param, e] : m.factors()) {
      auto it = pt.values.find(param);
      if (it == pt.values.end()) {
        throw std::out_of_range("eval_mod: parameter " + param.name() +
                                " is not assigned");
      }
      value = field.mul(value, field.pow(it->second, e));
    }
    total = field.add(total, value);
  }
  return total;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows,
                     const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint64_t factor = field.mul(rows[r][col], inv);
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace lincomp
