#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcolor/knotio.hpp"

namespace knotcolor {

// Integer polynomial in t, lowest degree first, no trailing (high-degree)
// zeros. Arithmetic throws std::overflow_error rather than wrapping.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<int64_t> coefficients);
  static IntPolynomial constant(int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial t() { return IntPolynomial({0, 1}); }

  const std::vector<int64_t> &coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int64_t evaluate(int64_t x) const;

  // Divides out t^k and fixes the sign so the constant term is positive.
  IntPolynomial normalized() const;

  friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
  friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
  IntPolynomial operator-() const;
  // Exact division; throws std::domain_error if b does not divide a.
  friend IntPolynomial exact_divide(const IntPolynomial &a, const IntPolynomial &b);
  friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

  // "1 - 1*t + 1*t^2"; the zero polynomial prints as "0".
  std::string to_string() const;

private:
  std::vector<int64_t> coeffs_;
};

// Rows indexed by crossings, columns by arcs (both 0-based here).
struct AlexanderMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<IntPolynomial> entries; // row-major

  const IntPolynomial &at(int r, int c) const { return entries[r * cols + c]; }
  IntPolynomial &at(int r, int c) { return entries[r * cols + c]; }
};

// Per crossing, with (j, k) = (under_in, under_out) for sign +1 and swapped
// for sign -1: 1-t at column over, t at column j, -1 at column k.
AlexanderMatrix alexander_matrix(const KnotDiagram &diagram);
// Fraction-free (Bareiss) elimination.
IntPolynomial determinant(AlexanderMatrix m);
// Determinant of the minor without the last row and column, normalized.
// 1 for the 0-crossing diagram.
IntPolynomial alexander_polynomial(const KnotDiagram &diagram);
uint64_t knot_determinant(const KnotDiagram &diagram);
bool alexander_trivial(const KnotDiagram &diagram);

// Integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> entries;
};

// Per crossing: 2 at over, -1 at each under arc (collisions summed).
IntMatrix fox_matrix(const KnotDiagram &diagram);

// Number of x in (Z/n)^cols with A x = 0 mod n, via CRT over the prime-power
// factors of n and diagonalisation over each Z/p^e.
uint64_t count_solutions_mod(const IntMatrix &a, uint64_t n);
uint64_t count_solutions_prime_power(const IntMatrix &a, uint64_t p, int e);
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

// Nontrivial Fox n-colourings: all solutions minus the n constant ones.
uint64_t fox_count(const KnotDiagram &diagram, int n);
bool fox_colorable(const KnotDiagram &diagram, int n);

} // namespace knotcolor
