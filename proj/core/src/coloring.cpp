#include "knotcolor/coloring.hpp"

#include <algorithm>
#include <functional>

#include "knotcolor/cnf.hpp"

namespace knotcolor {

namespace {

// Constraint at a crossing in solved form: colour(target) = colour(over) * colour(source).
struct Constraint {
  int over, source, target; // 0-based arcs
};

std::vector<Constraint> constraints_of(const KnotDiagram &d) {
  std::vector<Constraint> out;
  out.reserve(d.crossings.size());
  for (const Crossing &c : d.crossings) {
    if (c.sign > 0)
      out.push_back({c.over - 1, c.under_in - 1, c.under_out - 1});
    else
      out.push_back({c.over - 1, c.under_out - 1, c.under_in - 1});
  }
  return out;
}

uint64_t checked_power(uint64_t base, int exp, uint64_t cap) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      return cap + 1;
    r *= base;
  }
  return r;
}

bool two_colors(const std::vector<int> &colors) {
  return std::any_of(colors.begin(), colors.end(), [&](int c) { return c != colors.front(); });
}

} // namespace

std::optional<int> first_violation(const KnotDiagram &d, const Quandle &q, const Coloring &f) {
  if (static_cast<int>(f.colors.size()) != d.arc_count)
    return 0;
  for (int c : f.colors)
    if (c < 1 || c > q.size())
      return 0;
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing &x = d.crossings[k];
    bool ok = x.sign > 0 ? f.color(x.under_out) == q.op(f.color(x.over), f.color(x.under_in))
                         : f.color(x.under_in) == q.op(f.color(x.over), f.color(x.under_out));
    if (!ok)
      return k + 1;
  }
  return std::nullopt;
}

bool is_coloring(const KnotDiagram &d, const Quandle &q, const Coloring &f) {
  return !first_violation(d, q, f).has_value();
}

bool is_nontrivial(const Coloring &f) { return !f.colors.empty() && two_colors(f.colors); }

EngineResult color_brute(const KnotDiagram &d, const Quandle &q, Mode mode,
                         const SearchLimits &limits) {
  EngineResult result;
  if (d.is_round_unknot() || q.size() < 2)
    return result;
  const int n = d.arc_count;
  const int size = q.size();
  const uint64_t cap = limits.max_assignments == 0 ? UINT64_MAX - 1 : limits.max_assignments;
  const uint64_t total = checked_power(size, n, cap);
  if (total > cap)
    throw BudgetExceeded("brute force needs " + std::to_string(size) + "^" + std::to_string(n) +
                         " assignments, over the budget of " + std::to_string(cap));

  const auto cons = constraints_of(d);
  const Table &tab = q.table();
  Deadline clock(limits);
  std::vector<int> col(n, 0); // 0-based colours
  for (uint64_t it = 0; it < total; ++it) {
    if ((it & 0xffff) == 0)
      clock.check_time();
    bool ok = true;
    for (const Constraint &c : cons)
      if (tab[col[c.over] * size + col[c.source]] - 1 != col[c.target]) {
        ok = false;
        break;
      }
    if (ok && two_colors(col)) {
      ++result.nontrivial;
      if (!result.witness) {
        Coloring w;
        for (int v : col)
          w.colors.push_back(v + 1);
        result.witness = std::move(w);
      }
      if (mode == Mode::decide) {
        result.work = it + 1;
        return result;
      }
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++col[i] < size)
        break;
      col[i] = 0;
    }
  }
  result.work = total;
  return result;
}

// Greedy static order: start at arc 1, then repeatedly take the arc whose
// colouring lets propagation determine the most further arcs.
std::vector<ArcId> branch_order(const KnotDiagram &d) {
  const int n = d.arc_count;
  const auto cons = constraints_of(d);
  std::vector<ArcId> order;
  std::vector<char> known(n, 0);

  auto closure = [&](std::vector<char> &k) {
    int added = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Constraint &c : cons) {
        if (k[c.over] && k[c.source] && !k[c.target]) {
          k[c.target] = 1;
          ++added;
          changed = true;
        } else if (k[c.over] && k[c.target] && !k[c.source]) {
          k[c.source] = 1;
          ++added;
          changed = true;
        }
      }
    }
    return added;
  };

  std::vector<char> determined(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_gain = -1;
    for (int a = 0; a < n; ++a) {
      if (known[a])
        continue;
      if (order.empty() && a != 0)
        break;
      std::vector<char> trial = determined;
      int gain = trial[a] ? 0 : 1;
      trial[a] = 1;
      gain += closure(trial);
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    known[best] = 1;
    determined[best] = 1;
    closure(determined);
    order.push_back(best + 1);
    // Arcs already determined by propagation still get a slot in the order so
    // the search visits every arc; propagation assigns them before branching.
    for (int a = 0; a < n; ++a)
      if (determined[a] && !known[a]) {
        known[a] = 1;
        order.push_back(a + 1);
      }
  }
  return order;
}

namespace {

class Backtracker {
public:
  Backtracker(const KnotDiagram &d, const Quandle &q, Mode mode, const SearchLimits &limits)
      : q_(q), mode_(mode), cons_(constraints_of(d)), n_(d.arc_count), col_(n_, 0),
        incident_(n_), clock_(limits) {
    for (int k = 0; k < static_cast<int>(cons_.size()); ++k) {
      const auto &c = cons_[k];
      for (int a : {c.over, c.source, c.target})
        if (incident_[a].empty() || incident_[a].back() != k)
          incident_[a].push_back(k);
    }
    for (ArcId a : branch_order(d))
      order_.push_back(a - 1);
  }

  EngineResult run(bool pin_first) {
    if (pin_first) {
      if (assign(0, 1))
        search(0);
    } else {
      search(0);
    }
    result_.work = clock_.used();
    return result_;
  }

private:
  // Assigns and propagates; on conflict leaves the trail for the caller to undo.
  bool assign(int arc, int color) {
    size_t head = trail_.size();
    col_[arc] = color;
    trail_.push_back(arc);
    for (; head < trail_.size(); ++head) {
      for (int k : incident_[trail_[head]]) {
        const Constraint &c = cons_[k];
        int o = col_[c.over], s = col_[c.source], t = col_[c.target];
        if (o && s) {
          int v = q_.op(o, s);
          if (!t) {
            col_[c.target] = v;
            trail_.push_back(c.target);
          } else if (t != v) {
            return false;
          }
        } else if (o && t && !s) {
          col_[c.source] = q_.left_divide(o, t);
          trail_.push_back(c.source);
        }
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      col_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  // Returns true to stop the search.
  bool search(size_t pos) {
    clock_.charge_node();
    while (pos < order_.size() && col_[order_[pos]] != 0)
      ++pos;
    if (pos == order_.size()) {
      if (two_colors(col_)) {
        ++result_.nontrivial;
        if (!result_.witness)
          result_.witness = Coloring{col_};
        return mode_ == Mode::decide;
      }
      return false;
    }
    int arc = order_[pos];
    for (int c = 1; c <= q_.size(); ++c) {
      size_t mark = trail_.size();
      bool stop = assign(arc, c) && search(pos + 1);
      undo(mark);
      if (stop)
        return true;
    }
    return false;
  }

  const Quandle &q_;
  Mode mode_;
  std::vector<Constraint> cons_;
  int n_;
  std::vector<int> col_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<int> trail_;
  Deadline clock_;
  EngineResult result_;
};

} // namespace

EngineResult color_backtrack(const KnotDiagram &d, const Quandle &q, Mode mode,
                             const SearchLimits &limits, bool pin_first) {
  if (d.is_round_unknot() || q.size() < 2)
    return {};
  return Backtracker(d, q, mode, limits).run(pin_first);
}

EngineResult color_braid(const BraidWord &b, const Quandle &q, Mode mode,
                         const SearchLimits &limits) {
  require_knot_closure(b);
  EngineResult result;
  const int n = b.strands;
  const int size = q.size();
  if (size < 2)
    return result;
  const uint64_t cap = limits.max_assignments == 0 ? UINT64_MAX - 1 : limits.max_assignments;
  const uint64_t total = checked_power(size, n, cap);
  if (total > cap)
    throw BudgetExceeded("braid search needs " + std::to_string(size) + "^" + std::to_string(n) +
                         " initial tuples, over the budget of " + std::to_string(cap));

  Deadline clock(limits);
  std::vector<int> init(n, 1), cur(n);
  for (uint64_t it = 0; it < total; ++it) {
    if ((it & 0xfff) == 0)
      clock.check_time();
    cur = init;
    bool nontrivial = two_colors(init);
    for (int l : b.letters) {
      int i = std::abs(l) - 1;
      int a = cur[i], c = cur[i + 1];
      int fresh;
      if (l > 0) {
        fresh = q.op(a, c);
        cur[i] = fresh;
        cur[i + 1] = a;
      } else {
        fresh = q.left_divide(c, a);
        cur[i] = c;
        cur[i + 1] = fresh;
      }
      nontrivial = nontrivial || fresh != init[0];
    }
    if (cur == init && nontrivial) {
      ++result.nontrivial;
      if (!result.witness) {
        // Report the colouring of the closure diagram's arcs.
        KnotDiagram d = braid_to_diagram(b);
        auto found = color_backtrack(d, q, Mode::decide);
        result.witness = found.witness;
      }
      if (mode == Mode::decide) {
        result.work = it + 1;
        return result;
      }
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++init[i] <= size)
        break;
      init[i] = 1;
    }
  }
  result.work = total;
  return result;
}

std::optional<Coloring> find_coloring(const KnotDiagram &d, const Quandle &q,
                                      const SearchLimits &limits) {
  if (d.is_round_unknot() || q.size() < 2)
    return std::nullopt;
  // Pinning arc 1 is only sound when automorphisms act transitively.
  CnfInstance cnf = encode_cnf(d, q, {.symmetry_break = q.connected(), .nontrivial = true});
  SatResult r = sat_decide(cnf, limits);
  if (!r.satisfiable)
    return std::nullopt;
  return decode_model(r.model, d.arc_count, q.size());
}

bool colorable(const KnotDiagram &d, const Quandle &q, const SearchLimits &limits) {
  return find_coloring(d, q, limits).has_value();
}

uint64_t count_colorings(const KnotDiagram &d, const Quandle &q, const SearchLimits &limits) {
  if (d.is_round_unknot() || q.size() < 2)
    return 0;
  if (q.connected())
    return color_backtrack(d, q, Mode::count, limits, true).nontrivial * q.size();
  return color_backtrack(d, q, Mode::count, limits, false).nontrivial;
}

Coloring push_forward(const Coloring &f, const std::vector<int> &element_map) {
  Coloring out;
  out.colors.reserve(f.colors.size());
  for (int c : f.colors)
    out.colors.push_back(element_map.at(c - 1));
  return out;
}

} // namespace knotcolor
