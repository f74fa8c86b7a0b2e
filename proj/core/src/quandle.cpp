#include "knotcolor/quandle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>

namespace knotcolor {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    if (y < x)
      std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

Congruence from_sets(DisjointSets &ds, int n) {
  Congruence c;
  c.rep.assign(n + 1, 0);
  std::vector<int> least(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    int r = ds.find(a);
    if (least[r] == 0)
      least[r] = a;
    c.rep[a] = least[r];
  }
  return c;
}

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

} // namespace

std::string describe(const AxiomViolation &v) {
  struct {
    std::string operator()(const MalformedTable &m) const { return "malformed table: " + m.reason; }
    std::string operator()(const NotIdempotent &x) const {
      return "NotIdempotent(" + std::to_string(x.a) + ")";
    }
    std::string operator()(const NotLeftInvertible &x) const {
      return "NotLeftInvertible(" + std::to_string(x.a) + ", " + std::to_string(x.b) + ", " +
             std::to_string(x.b_prime) + ")";
    }
    std::string operator()(const NotDistributive &x) const {
      return "NotDistributive(" + std::to_string(x.a) + ", " + std::to_string(x.b) + ", " +
             std::to_string(x.c) + ")";
    }
  } visitor;
  return std::visit(visitor, v);
}

std::optional<AxiomViolation> check_axioms(const Table &t, int n) {
  if (n < 1)
    return MalformedTable{"size must be positive"};
  if (t.size() != static_cast<size_t>(n) * n)
    return MalformedTable{"expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(t.size())};
  for (int v : t)
    if (v < 1 || v > n)
      return MalformedTable{"entry " + std::to_string(v) + " out of range 1.." + std::to_string(n)};
  auto op = [&](int a, int b) { return t[(a - 1) * n + (b - 1)]; };
  for (int a = 1; a <= n; ++a)
    if (op(a, a) != a)
      return NotIdempotent{a};
  for (int a = 1; a <= n; ++a) {
    std::vector<int> first(n + 1, 0);
    for (int b = 1; b <= n; ++b) {
      int v = op(a, b);
      if (first[v] != 0)
        return NotLeftInvertible{a, first[v], b};
      first[v] = b;
    }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (op(a, op(b, c)) != op(op(a, b), op(a, c)))
          return NotDistributive{a, b, c};
  return std::nullopt;
}

Quandle::Quandle(Table table, std::string name, bool affine)
    : size_(0), table_(std::move(table)), name_(std::move(name)), affine_(affine) {
  long long n = 0;
  while (n * n < static_cast<long long>(table_.size()))
    ++n;
  if (auto v = check_axioms(table_, static_cast<int>(n)))
    throw AxiomError(*v);
  size_ = static_cast<int>(n);
  inverse_.assign(table_.size(), 0);
  for (int a = 1; a <= size_; ++a)
    for (int b = 1; b <= size_; ++b)
      inverse_[(a - 1) * size_ + (op(a, b) - 1)] = b;
  involutory_ = is_involutory(*this);
  connected_ = is_connected(*this);
}

Quandle verify_axioms(const Table &table, int size, std::string name) {
  if (auto v = check_axioms(table, size))
    throw AxiomError(*v);
  return Quandle(table, std::move(name));
}

Quandle trivial_quandle(int n) {
  Table t(static_cast<size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      t[(a - 1) * n + (b - 1)] = b;
  return Quandle(std::move(t), "trivial:" + std::to_string(n));
}

Quandle dihedral(int n) {
  if (n < 1)
    throw std::invalid_argument("dihedral(n) needs n >= 1");
  Quandle q = affine(n, n - 1);
  q.set_name("dihedral:" + std::to_string(n));
  return q;
}

Quandle affine(int n, int t) {
  if (n < 1)
    throw std::invalid_argument("affine(n, t) needs n >= 1");
  if (std::gcd(mod(t, n), n) != 1)
    throw std::invalid_argument("affine(" + std::to_string(n) + ", " + std::to_string(t) +
                                "): gcd(t, n) != 1");
  Table tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tab[a * n + b] = mod(static_cast<long long>(1 - t) * a + static_cast<long long>(t) * b, n) + 1;
  return Quandle(std::move(tab), "affine:" + std::to_string(n) + ":" + std::to_string(mod(t, n)),
                 true);
}

bool affine_connected_by_formula(int n, int t) { return std::gcd(mod(1 - t, n), n) == 1; }

void verify_group(const GroupTable &g) {
  const int n = g.order;
  if (n < 1 || g.mul.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("group table has wrong shape");
  for (int v : g.mul)
    if (v < 0 || v >= n)
      throw std::invalid_argument("group table entry out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g(g(x, y), z) != g(x, g(y, z)))
          throw std::invalid_argument("group table is not associative");
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      ok = g(x, y) == y && g(y, x) == y;
    if (ok)
      e = x;
  }
  if (e < 0)
    throw std::invalid_argument("group table has no identity");
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = g(x, y) == e && g(y, x) == e;
    if (!found)
      throw std::invalid_argument("element " + std::to_string(x) + " has no inverse");
  }
}

int group_identity(const GroupTable &g) {
  for (int x = 0; x < g.order; ++x)
    if (g(x, x) == x)
      return x;
  throw std::invalid_argument("group has no identity");
}

int group_inverse(const GroupTable &g, int x) {
  int e = group_identity(g);
  for (int y = 0; y < g.order; ++y)
    if (g(x, y) == e)
      return y;
  throw std::invalid_argument("element has no inverse");
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupTable permutation_group(const std::vector<std::vector<int>> &elems, std::string name) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i)
    index[elems[i]] = static_cast<int>(i);
  GroupTable g;
  g.order = static_cast<int>(elems.size());
  g.name = std::move(name);
  g.mul.resize(elems.size() * elems.size());
  const size_t n = elems.empty() ? 0 : elems[0].size();
  std::vector<int> comp(n);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      // (g h)(x) = g(h(x))
      for (size_t x = 0; x < n; ++x)
        comp[x] = elems[i][elems[j][x]];
      g.mul[i * elems.size() + j] = index.at(comp);
    }
  return g;
}

bool is_even(const std::vector<int> &p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

} // namespace

GroupTable symmetric_group(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("symmetric_group supports 1 <= n <= 6");
  return permutation_group(all_permutations(n), "S" + std::to_string(n));
}

GroupTable alternating_group(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("alternating_group supports 1 <= n <= 6");
  std::vector<std::vector<int>> even;
  for (auto &p : all_permutations(n))
    if (is_even(p))
      even.push_back(p);
  return permutation_group(even, "A" + std::to_string(n));
}

int permutation_index(const std::vector<int> &perm) {
  auto all = all_permutations(static_cast<int>(perm.size()));
  auto it = std::find(all.begin(), all.end(), perm);
  if (it == all.end())
    throw std::invalid_argument("not a permutation");
  return static_cast<int>(it - all.begin());
}

std::vector<int> conjugacy_class(const GroupTable &g, int r) {
  if (r < 0 || r >= g.order)
    throw std::invalid_argument("class representative out of range");
  std::vector<bool> in(g.order, false);
  for (int x = 0; x < g.order; ++x)
    in[g(g(x, r), group_inverse(g, x))] = true;
  std::vector<int> cls;
  for (int x = 0; x < g.order; ++x)
    if (in[x])
      cls.push_back(x);
  return cls;
}

std::vector<int> class_representatives(const GroupTable &g) {
  std::vector<bool> covered(g.order, false);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (covered[x])
      continue;
    reps.push_back(x);
    for (int y : conjugacy_class(g, x))
      covered[y] = true;
  }
  return reps;
}

Quandle conjugation(const GroupTable &g, int representative) {
  verify_group(g);
  std::vector<int> cls = conjugacy_class(g, representative);
  std::vector<int> pos(g.order, 0);
  for (size_t i = 0; i < cls.size(); ++i)
    pos[cls[i]] = static_cast<int>(i) + 1;
  const int k = static_cast<int>(cls.size());
  Table t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int a = cls[i], b = cls[j];
      t[i * k + j] = pos[g(g(a, b), group_inverse(g, a))];
    }
  return Quandle(std::move(t), "conj:" + (g.name.empty() ? "G" : g.name) + ":" +
                                   std::to_string(representative));
}

bool is_connected(const Quandle &q) {
  const int n = q.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a = 1; a <= n; ++a)
      for (int y : {q.op(a, x), q.left_divide(a, x)})
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
  }
  return reached == n;
}

bool is_involutory(const Quandle &q) {
  for (int a = 1; a <= q.size(); ++a)
    for (int b = 1; b <= q.size(); ++b)
      if (q.op(a, q.op(a, b)) != b)
        return false;
  return true;
}

bool is_medial(const Quandle &q) {
  const int n = q.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          if (q.op(q.op(a, b), q.op(c, d)) != q.op(q.op(a, c), q.op(b, d)))
            return false;
  return true;
}

int Congruence::blocks() const {
  int count = 0;
  for (size_t a = 1; a < rep.size(); ++a)
    count += rep[a] == static_cast<int>(a);
  return count;
}

bool Congruence::is_diagonal() const { return blocks() == static_cast<int>(rep.size()) - 1; }
bool Congruence::is_total() const { return blocks() == 1; }

bool is_congruence(const Quandle &q, const Congruence &theta) {
  const int n = q.size();
  if (theta.rep.size() != static_cast<size_t>(n) + 1)
    return false;
  for (int a = 1; a <= n; ++a)
    for (int a2 = 1; a2 <= n; ++a2) {
      if (theta.rep[a] != theta.rep[a2])
        continue;
      for (int b = 1; b <= n; ++b)
        for (int b2 = 1; b2 <= n; ++b2)
          if (theta.rep[b] == theta.rep[b2] &&
              theta.rep[q.op(a, b)] != theta.rep[q.op(a2, b2)])
            return false;
    }
  return true;
}

Congruence diagonal_congruence(int n) {
  Congruence c;
  c.rep.resize(n + 1);
  std::iota(c.rep.begin(), c.rep.end(), 0);
  return c;
}

// Union-find closure: every successful merge of (x, y) queues the images
// (z*x, z*y) and (x*z, y*z); translating a generating chain gives a chain.
Congruence principal_congruence(const Quandle &q, int a, int b) {
  const int n = q.size();
  DisjointSets ds(n);
  std::queue<std::pair<int, int>> work;
  if (ds.unite(a, b))
    work.push({a, b});
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    for (int z = 1; z <= n; ++z) {
      int l1 = q.op(z, x), l2 = q.op(z, y);
      if (ds.unite(l1, l2))
        work.push({l1, l2});
      int r1 = q.op(x, z), r2 = q.op(y, z);
      if (ds.unite(r1, r2))
        work.push({r1, r2});
    }
  }
  return from_sets(ds, n);
}

Congruence join(const Congruence &x, const Congruence &y) {
  const int n = static_cast<int>(x.rep.size()) - 1;
  DisjointSets ds(n);
  for (int a = 1; a <= n; ++a) {
    ds.unite(a, x.rep[a]);
    ds.unite(a, y.rep[a]);
  }
  return from_sets(ds, n);
}

std::set<Congruence> congruences(const Quandle &q, int size_guard) {
  const int n = q.size();
  if (n > size_guard)
    throw SizeGuardExceeded("congruence enumeration limited to size " + std::to_string(size_guard));
  std::set<Congruence> principal;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      principal.insert(principal_congruence(q, a, b));

  constexpr size_t kMaxCongruences = 200000;
  std::set<Congruence> all{diagonal_congruence(n)};
  std::vector<Congruence> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto &theta : frontier)
      for (const auto &p : principal) {
        Congruence j = join(theta, p);
        if (all.insert(j).second)
          next.push_back(std::move(j));
      }
    if (all.size() > kMaxCongruences)
      throw SizeGuardExceeded("too many congruences");
    frontier = std::move(next);
  }
  return all;
}

bool is_simple(const Quandle &q, int size_guard) {
  const int n = q.size();
  if (n > size_guard)
    throw SizeGuardExceeded("simplicity check limited to size " + std::to_string(size_guard));
  if (n < 2)
    return false;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!principal_congruence(q, a, b).is_total())
        return false;
  return true;
}

Subquandle subquandle_generated(const Quandle &q, const std::vector<int> &generators) {
  if (generators.empty())
    throw std::invalid_argument("subquandle needs at least one generator");
  const int n = q.size();
  std::vector<bool> in(n + 1, false);
  std::vector<int> members;
  for (int g : generators) {
    if (g < 1 || g > n)
      throw std::invalid_argument("generator out of range");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (auto [x, y] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}})
        for (int z : {q.op(x, y), q.left_divide(x, y)})
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
          }
  std::sort(members.begin(), members.end());
  std::vector<int> pos(n + 1, 0);
  for (size_t i = 0; i < members.size(); ++i)
    pos[members[i]] = static_cast<int>(i) + 1;
  const int k = static_cast<int>(members.size());
  Table t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[i * k + j] = pos[q.op(members[i], members[j])];
  Quandle sub(std::move(t), q.name().empty() ? "" : "sub(" + q.name() + ")", q.affine() && k == n);
  return {std::move(sub), std::move(members)};
}

FactorQuandle factor(const Quandle &q, const Congruence &theta) {
  if (!is_congruence(q, theta))
    throw std::invalid_argument("partition is not a congruence");
  const int n = q.size();
  std::vector<int> block_of(n + 1, 0);
  int k = 0;
  for (int a = 1; a <= n; ++a)
    if (theta.rep[a] == a)
      block_of[a] = ++k;
  std::vector<int> projection(n);
  for (int a = 1; a <= n; ++a)
    projection[a - 1] = block_of[theta.rep[a]];
  Table t(static_cast<size_t>(k) * k, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      t[(projection[a - 1] - 1) * k + (projection[b - 1] - 1)] = projection[q.op(a, b) - 1];
  // Factors of affine quandles are affine.
  Quandle fq(std::move(t), q.name().empty() ? "" : q.name() + "/theta", q.affine());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      assert(projection[q.op(a, b) - 1] == fq.op(projection[a - 1], projection[b - 1]));
  return {std::move(fq), std::move(projection)};
}

Table relabel(const Quandle &q, const std::vector<int> &perm) {
  const int n = q.size();
  Table t(static_cast<size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      t[(perm[a - 1] - 1) * n + (perm[b - 1] - 1)] = perm[q.op(a, b) - 1];
  return t;
}

Table canonical_table(const Quandle &q) {
  const int n = q.size();
  if (n > kCanonicalSizeLimit)
    return q.table();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Table best = q.table();
  do {
    Table t = relabel(q, perm);
    if (t < best)
      best = std::move(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

bool extend_iso(const Quandle &x, const Quandle &y, std::vector<int> &map, std::vector<bool> &used,
                int next) {
  const int n = x.size();
  if (next > n)
    return true;
  for (int cand = 1; cand <= n; ++cand) {
    if (used[cand])
      continue;
    map[next] = cand;
    bool ok = true;
    for (int a = 1; a <= next && ok; ++a)
      for (int b = 1; b <= next && ok; ++b) {
        int prod = x.op(a, b);
        if (prod <= next)
          ok = map[prod] == y.op(map[a], map[b]);
      }
    if (ok) {
      used[cand] = true;
      if (extend_iso(x, y, map, used, next + 1))
        return true;
      used[cand] = false;
    }
  }
  map[next] = 0;
  return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Quandle &x, const Quandle &y) {
  if (x.size() != y.size())
    return std::nullopt;
  std::vector<int> map(x.size() + 1, 0);
  std::vector<bool> used(x.size() + 1, false);
  if (!extend_iso(x, y, map, used, 1))
    return std::nullopt;
  return std::vector<int>(map.begin() + 1, map.end());
}

} // namespace knotcolor
