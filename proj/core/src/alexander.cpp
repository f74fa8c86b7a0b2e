#include "knotcolor/alexander.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace knotcolor {

namespace {

int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

void trim(std::vector<int64_t> &c) {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

int64_t IntPolynomial::evaluate(int64_t x) const {
  int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = add(mul(r, x), *it);
  return r;
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero())
    return {};
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c != 0; });
  std::vector<int64_t> c(first, coeffs_.end());
  if (c.front() < 0)
    for (auto &x : c)
      x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
  std::vector<int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    c[i] = a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i)
    c[i] = add(c[i], b.coeffs_[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<int64_t> c = coeffs_;
  for (auto &x : c)
    x = mul(x, -1);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = add(c[i + j], mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial &a, const IntPolynomial &b) {
  if (b.is_zero())
    throw std::domain_error("division by the zero polynomial");
  if (a.is_zero())
    return {};
  if (a.degree() < b.degree())
    throw std::domain_error("inexact polynomial division");
  std::vector<int64_t> rem = a.coeffs_;
  std::vector<int64_t> quot(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
  const int64_t lead = b.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    int64_t top = rem[k + b.degree()];
    if (top % lead != 0)
      throw std::domain_error("inexact polynomial division");
    int64_t f = top / lead;
    quot[k] = f;
    if (f != 0)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        rem[k + j] = add(rem[k + j], -mul(f, b.coeffs_[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](int64_t x) { return x != 0; }))
    throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    int64_t c = coeffs_[k];
    if (c == 0)
      continue;
    if (out.empty())
      out += std::to_string(c);
    else
      out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
    if (k == 1)
      out += "*t";
    else if (k > 1)
      out += "*t^" + std::to_string(k);
  }
  return out;
}

AlexanderMatrix alexander_matrix(const KnotDiagram &d) {
  AlexanderMatrix m;
  if (d.is_round_unknot())
    return m;
  m.rows = d.crossing_count();
  m.cols = d.arc_count;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, IntPolynomial{});
  const IntPolynomial one_minus_t({1, -1});
  for (int r = 0; r < m.rows; ++r) {
    const Crossing &c = d.crossings[r];
    int j = c.sign > 0 ? c.under_in : c.under_out;
    int k = c.sign > 0 ? c.under_out : c.under_in;
    m.at(r, c.over - 1) = m.at(r, c.over - 1) + one_minus_t;
    m.at(r, j - 1) = m.at(r, j - 1) + IntPolynomial::t();
    m.at(r, k - 1) = m.at(r, k - 1) + IntPolynomial::constant(-1);
  }
  return m;
}

IntPolynomial determinant(AlexanderMatrix m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0)
    return IntPolynomial::constant(1);
  int sign = 1;
  IntPolynomial prev = IntPolynomial::constant(1);
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_with = -1;
      for (int i = k + 1; i < n && swap_with < 0; ++i)
        if (!m.at(i, k).is_zero())
          swap_with = i;
      if (swap_with < 0)
        return {};
      for (int j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(swap_with, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = exact_divide(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = IntPolynomial{};
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntPolynomial alexander_polynomial(const KnotDiagram &d) {
  if (d.is_round_unknot())
    return IntPolynomial::constant(1);
  AlexanderMatrix full = alexander_matrix(d);
  AlexanderMatrix minor;
  minor.rows = full.rows - 1;
  minor.cols = full.cols - 1;
  for (int r = 0; r < minor.rows; ++r)
    for (int c = 0; c < minor.cols; ++c)
      minor.entries.push_back(full.at(r, c));
  return determinant(std::move(minor)).normalized();
}

uint64_t knot_determinant(const KnotDiagram &d) {
  int64_t v = alexander_polynomial(d).evaluate(-1);
  return static_cast<uint64_t>(v < 0 ? -v : v);
}

bool alexander_trivial(const KnotDiagram &d) {
  return alexander_polynomial(d) == IntPolynomial::constant(1);
}

IntMatrix fox_matrix(const KnotDiagram &d) {
  IntMatrix a;
  a.rows = d.crossing_count();
  a.cols = d.arc_count;
  a.entries.assign(static_cast<size_t>(a.rows) * a.cols, 0);
  for (int r = 0; r < a.rows; ++r) {
    const Crossing &c = d.crossings[r];
    a.entries[r * a.cols + c.over - 1] += 2;
    a.entries[r * a.cols + c.under_in - 1] -= 1;
    a.entries[r * a.cols + c.under_out - 1] -= 1;
  }
  return a;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0)
      out.push_back({p, e});
  }
  if (n > 1)
    out.push_back({n, 1});
  return out;
}

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("solution count overflows 64 bits");
  return r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

int64_t inverse_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, r = a;
  while (r != 0) {
    int64_t q = g / r;
    std::tie(g, r) = std::make_tuple(r, g - q * r);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  if (g != 1)
    throw std::logic_error("not a unit");
  return ((x % m) + m) % m;
}

int valuation(uint64_t a, uint64_t p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

} // namespace

// Diagonalise over the local ring Z/p^e: the pivot is an entry of least
// p-valuation, which divides every other entry of the remaining block.
uint64_t count_solutions_prime_power(const IntMatrix &a, uint64_t p, int e) {
  uint64_t mod = 1;
  for (int i = 0; i < e; ++i)
    mod = checked_mul(mod, p);
  const int rows = a.rows, cols = a.cols;
  std::vector<uint64_t> m(a.entries.size());
  for (size_t i = 0; i < m.size(); ++i) {
    int64_t v = a.entries[i] % static_cast<int64_t>(mod);
    m[i] = static_cast<uint64_t>(v < 0 ? v + static_cast<int64_t>(mod) : v);
  }
  auto at = [&](int r, int c) -> uint64_t & { return m[r * cols + c]; };

  int exponent = 0; // solutions = p^exponent
  int rank = 0;
  for (int r = 0; r < std::min(rows, cols); ++r) {
    int best_v = e, br = -1, bc = -1;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j)
        if (at(i, j) != 0) {
          int v = valuation(at(i, j), p);
          if (v < best_v) {
            best_v = v;
            br = i;
            bc = j;
          }
        }
    if (br < 0)
      break;
    for (int j = 0; j < cols; ++j)
      std::swap(at(r, j), at(br, j));
    for (int i = 0; i < rows; ++i)
      std::swap(at(i, r), at(i, bc));

    uint64_t pv = 1;
    for (int i = 0; i < best_v; ++i)
      pv *= p;
    uint64_t unit_inv = static_cast<uint64_t>(
        inverse_mod(static_cast<int64_t>(at(r, r) / pv), static_cast<int64_t>(mod)));
    for (int i = r + 1; i < rows; ++i) {
      if (at(i, r) == 0)
        continue;
      uint64_t f = mulmod(at(i, r) / pv, unit_inv, mod);
      for (int j = r; j < cols; ++j)
        at(i, j) = (at(i, j) + mod - mulmod(f, at(r, j), mod)) % mod;
    }
    // Column operations only touch row r now that column r is clear below.
    for (int j = r + 1; j < cols; ++j)
      at(r, j) = 0;
    exponent += best_v;
    ++rank;
  }
  exponent += e * (cols - rank);
  uint64_t count = 1;
  for (int i = 0; i < exponent; ++i)
    count = checked_mul(count, p);
  return count;
}

uint64_t count_solutions_mod(const IntMatrix &a, uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("modulus must be positive");
  uint64_t total = 1;
  for (auto [p, e] : factorize(n))
    total = checked_mul(total, count_solutions_prime_power(a, p, e));
  return total;
}

uint64_t fox_count(const KnotDiagram &d, int n) {
  if (n < 2)
    throw std::invalid_argument("fox_count needs n >= 2");
  return count_solutions_mod(fox_matrix(d), static_cast<uint64_t>(n)) - static_cast<uint64_t>(n);
}

bool fox_colorable(const KnotDiagram &d, int n) { return fox_count(d, n) > 0; }

} // namespace knotcolor
