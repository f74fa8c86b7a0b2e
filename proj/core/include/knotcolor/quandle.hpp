#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace knotcolor {

// Elements are 1..size. Row-major table: table[(a-1)*size + (b-1)] = a*b.
using Table = std::vector<int>;

struct NotIdempotent {
  int a;
};
struct NotLeftInvertible {
  // a*b == a*b_prime with b != b_prime
  int a, b, b_prime;
};
struct NotDistributive {
  // a*(b*c) != (a*b)*(a*c)
  int a, b, c;
};
struct MalformedTable {
  std::string reason;
};
using AxiomViolation = std::variant<MalformedTable, NotIdempotent, NotLeftInvertible, NotDistributive>;

std::string describe(const AxiomViolation &v);

class AxiomError : public std::runtime_error {
public:
  explicit AxiomError(AxiomViolation v) : std::runtime_error(describe(v)), violation(std::move(v)) {}
  AxiomViolation violation;
};

// First violation in the order: shape, idempotence, left division,
// distributivity (each scanned lexicographically).
std::optional<AxiomViolation> check_axioms(const Table &table, int size);

class Quandle {
public:
  // Verifies the axioms; throws AxiomError.
  Quandle(Table table, std::string name = {}, bool affine = false);

  int size() const { return size_; }
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const Table &table() const { return table_; }

  int op(int a, int b) const { return table_[(a - 1) * size_ + (b - 1)]; }
  // The unique c with a*c = b.
  int left_divide(int a, int b) const { return inverse_[(a - 1) * size_ + (b - 1)]; }

  bool affine() const { return affine_; }
  void mark_affine() { affine_ = true; }
  bool involutory() const { return involutory_; }
  bool connected() const { return connected_; }

  friend bool operator==(const Quandle &x, const Quandle &y) { return x.table_ == y.table_; }

private:
  int size_;
  Table table_;
  Table inverse_;
  std::string name_;
  bool affine_;
  bool involutory_;
  bool connected_;
};

Quandle verify_axioms(const Table &table, int size, std::string name = {});

Quandle trivial_quandle(int size);
Quandle dihedral(int n);
// a*b = (1-t)a + t b over Z_n; requires gcd(t, n) = 1.
Quandle affine(int n, int t);
bool affine_connected_by_formula(int n, int t);

// Finite group as a Cayley table over 0..order-1 (0-based, unlike quandles).
struct GroupTable {
  int order = 0;
  std::vector<int> mul; // mul[g*order + h] = g*h
  std::string name;

  int operator()(int g, int h) const { return mul[g * order + h]; }
};

// Throws std::invalid_argument unless the table is a group.
void verify_group(const GroupTable &g);
int group_identity(const GroupTable &g);
int group_inverse(const GroupTable &g, int x);
GroupTable symmetric_group(int n);
GroupTable alternating_group(int n);
// Element index of a permutation (images of 0..n-1) in symmetric_group(n).
int permutation_index(const std::vector<int> &perm);

// Conjugacy class of `representative`, sorted by element index; a*b = a b a^-1.
Quandle conjugation(const GroupTable &group, int representative);
std::vector<int> conjugacy_class(const GroupTable &group, int representative);
// One representative (the least element) per conjugacy class.
std::vector<int> class_representatives(const GroupTable &group);

bool is_connected(const Quandle &q);
bool is_involutory(const Quandle &q);
// (a*b)*(c*d) = (a*c)*(b*d)
bool is_medial(const Quandle &q);

// Block map: element -> least element of its block.
struct Congruence {
  std::vector<int> rep; // index 0 unused

  int blocks() const;
  bool is_diagonal() const;
  bool is_total() const;
  friend auto operator<=>(const Congruence &, const Congruence &) = default;
};

class SizeGuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCongruenceSizeGuard = 64;

bool is_congruence(const Quandle &q, const Congruence &theta);
Congruence diagonal_congruence(int size);
Congruence principal_congruence(const Quandle &q, int a, int b);
Congruence join(const Congruence &x, const Congruence &y);
std::set<Congruence> congruences(const Quandle &q, int size_guard = kDefaultCongruenceSizeGuard);
// q >= 2 and the only congruences are the diagonal and the total relation.
// The 2-element trivial quandle counts as simple here although it is not
// connected.
bool is_simple(const Quandle &q, int size_guard = kDefaultCongruenceSizeGuard);

struct Subquandle {
  Quandle quandle;
  std::vector<int> embedding; // sub element i (1-based) -> embedding[i-1] in parent
};
Subquandle subquandle_generated(const Quandle &q, const std::vector<int> &generators);

struct FactorQuandle {
  Quandle quandle;
  std::vector<int> projection; // parent element a -> projection[a-1]
};
FactorQuandle factor(const Quandle &q, const Congruence &theta);

// Relabeled table: result[(s(a)-1)*n + s(b)-1] = s(a*b), s = perm (1-based).
Table relabel(const Quandle &q, const std::vector<int> &perm);
// Lexicographically least relabeling for size <= 8; the table itself above.
inline constexpr int kCanonicalSizeLimit = 8;
Table canonical_table(const Quandle &q);
// Exhaustive bijection search; returns the element map if isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Quandle &x, const Quandle &y);

} // namespace knotcolor
