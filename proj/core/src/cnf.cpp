#include "knotcolor/cnf.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace knotcolor {

CnfInstance encode_cnf(const KnotDiagram &d, const Quandle &q, EncodeOptions options) {
  const int size = q.size();
  const int n = d.arc_count;
  if (size < 2)
    throw std::invalid_argument("encode_cnf needs a quandle with at least 2 elements");
  if (n < 1)
    throw std::invalid_argument("encode_cnf needs at least one arc");

  CnfInstance cnf;
  cnf.num_vars = n * size;
  auto var = [&](int arc, int c) { return cnf_var(arc, c, size); };

  for (int i = 1; i <= n; ++i) {
    std::vector<int> alo;
    for (int c = 1; c <= size; ++c)
      alo.push_back(var(i, c));
    cnf.clauses.push_back(std::move(alo));
    for (int c = 1; c <= size; ++c)
      for (int e = c + 1; e <= size; ++e)
        cnf.clauses.push_back({-var(i, c), -var(i, e)});
  }
  if (options.nontrivial)
    for (int c = 1; c <= size; ++c) {
      std::vector<int> clause;
      for (int i = 1; i <= n; ++i)
        clause.push_back(-var(i, c));
      cnf.clauses.push_back(std::move(clause));
    }
  for (const Crossing &x : d.crossings) {
    int j = x.sign > 0 ? x.under_in : x.under_out;
    int k = x.sign > 0 ? x.under_out : x.under_in;
    for (int c = 1; c <= size; ++c)
      for (int e = 1; e <= size; ++e)
        cnf.clauses.push_back({-var(x.over, c), -var(j, e), var(k, q.op(c, e))});
  }
  if (options.symmetry_break)
    cnf.clauses.push_back({var(1, 1)});
  return cnf;
}

std::string emit_dimacs(const CnfInstance &cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto &clause : cnf.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfInstance cnf;
  long declared = -1;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c")
      continue;
    if (first == "%")
      break;
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> cnf.num_vars >> declared) || fmt != "cnf")
        throw ParseError("bad DIMACS header: " + line);
      continue;
    }
    if (declared < 0)
      throw ParseError("DIMACS clause before header");
    std::istringstream all(line);
    long long lit;
    while (all >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::llabs(lit) > cnf.num_vars)
          throw ParseError("DIMACS literal " + std::to_string(lit) + " out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!all.eof())
      throw ParseError("bad DIMACS clause line: " + line);
  }
  if (!current.empty())
    cnf.clauses.push_back(std::move(current));
  if (declared < 0)
    throw ParseError("missing DIMACS header");
  if (static_cast<long>(cnf.clauses.size()) != declared)
    throw ParseError("DIMACS header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  return cnf;
}

bool satisfies(const CnfInstance &cnf, const std::vector<bool> &model) {
  if (model.size() < static_cast<size_t>(cnf.num_vars) + 1)
    return false;
  for (const auto &clause : cnf.clauses) {
    bool sat = std::any_of(clause.begin(), clause.end(),
                           [&](int lit) { return model[std::abs(lit)] == (lit > 0); });
    if (!sat)
      return false;
  }
  return true;
}

namespace {

// Literal index: 2*var for positive, 2*var+1 for negative.
inline int lit_index(int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); }

class Dpll {
public:
  Dpll(const CnfInstance &cnf, const SearchLimits &limits)
      : nvars_(cnf.num_vars), value_(nvars_ + 1, kUnset), watches_(2 * (nvars_ + 1)),
        clock_(limits) {
    for (const auto &raw : cnf.clauses) {
      std::vector<int> c = raw;
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool tautology = false;
      for (size_t i = 0; i + 1 < c.size() && !tautology; ++i)
        tautology = std::binary_search(c.begin(), c.end(), -c[i]);
      if (tautology)
        continue;
      if (c.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      if (c.size() == 1) {
        units_.push_back(c[0]);
        continue;
      }
      int id = static_cast<int>(clauses_.size());
      clauses_.push_back(std::move(c));
      watches_[lit_index(clauses_[id][0])].push_back(id);
      watches_[lit_index(clauses_[id][1])].push_back(id);
    }
  }

  SatResult solve() {
    SatResult r;
    if (trivially_unsat_)
      return r;
    for (int u : units_) {
      if (value_of(u) == kFalse)
        return r;
      if (value_of(u) == kUnset)
        enqueue(u);
    }
    int next_var = 1;
    while (true) {
      if (!propagate()) {
        ++stats_.conflicts;
        // Undo to the deepest decision whose opposite value is untried.
        while (!levels_.empty() && levels_.back().flipped)
          pop_level();
        if (levels_.empty()) {
          finish(r);
          return r;
        }
        int lit = levels_.back().decision;
        pop_level();
        levels_.push_back({-lit, trail_.size(), true});
        enqueue(-lit);
        next_var = 1;
        continue;
      }
      while (next_var <= nvars_ && value_[next_var] != kUnset)
        ++next_var;
      if (next_var > nvars_) {
        r.satisfiable = true;
        r.model.assign(nvars_ + 1, false);
        for (int v = 1; v <= nvars_; ++v)
          r.model[v] = value_[v] == kTrue;
        finish(r);
        return r;
      }
      clock_.charge_node();
      ++stats_.decisions;
      levels_.push_back({next_var, trail_.size(), false});
      enqueue(next_var);
    }
  }

private:
  static constexpr signed char kUnset = -1, kFalse = 0, kTrue = 1;

  struct Level {
    int decision;
    size_t trail_mark;
    bool flipped;
  };

  signed char value_of(int lit) const {
    signed char v = value_[std::abs(lit)];
    if (v == kUnset)
      return kUnset;
    return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
  }

  void enqueue(int lit) {
    value_[std::abs(lit)] = lit > 0 ? kTrue : kFalse;
    trail_.push_back(lit);
  }

  void pop_level() {
    size_t mark = levels_.back().trail_mark;
    while (trail_.size() > mark) {
      value_[std::abs(trail_.back())] = kUnset;
      trail_.pop_back();
    }
    levels_.pop_back();
    qhead_ = std::min(qhead_, trail_.size());
  }

  // Two watched literals per clause; returns false on conflict.
  bool propagate() {
    while (qhead_ < trail_.size()) {
      int falsified = -trail_[qhead_++];
      auto &ws = watches_[lit_index(falsified)];
      size_t keep = 0;
      for (size_t w = 0; w < ws.size(); ++w) {
        int id = ws[w];
        auto &c = clauses_[id];
        if (c[0] == falsified)
          std::swap(c[0], c[1]);
        if (value_of(c[0]) == kTrue) {
          ws[keep++] = id;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k)
          if (value_of(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[lit_index(c[1])].push_back(id);
            moved = true;
            break;
          }
        if (moved)
          continue;
        ws[keep++] = id;
        if (value_of(c[0]) == kFalse) {
          for (++w; w < ws.size(); ++w)
            ws[keep++] = ws[w];
          ws.resize(keep);
          qhead_ = trail_.size();
          return false;
        }
        ++stats_.propagations;
        enqueue(c[0]);
      }
      ws.resize(keep);
    }
    return true;
  }

  void finish(SatResult &r) const {
    r.decisions = stats_.decisions;
    r.propagations = stats_.propagations;
    r.conflicts = stats_.conflicts;
  }

  int nvars_;
  std::vector<signed char> value_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> units_;
  std::vector<int> trail_;
  std::vector<Level> levels_;
  size_t qhead_ = 0;
  bool trivially_unsat_ = false;
  Deadline clock_;
  SatResult stats_;
};

} // namespace

SatResult sat_decide(const CnfInstance &cnf, const SearchLimits &limits) {
  SatResult r = Dpll(cnf, limits).solve();
  if (r.satisfiable && !satisfies(cnf, r.model))
    throw std::logic_error("SAT model does not satisfy the instance");
  return r;
}

Coloring decode_model(const std::vector<bool> &model, int arcs, int q) {
  Coloring f;
  f.colors.assign(arcs, 0);
  for (int i = 1; i <= arcs; ++i)
    for (int c = 1; c <= q; ++c)
      if (model.at(cnf_var(i, c, q))) {
        if (f.colors[i - 1] != 0)
          throw std::logic_error("model gives arc " + std::to_string(i) + " two colours");
        f.colors[i - 1] = c;
      }
  for (int i = 0; i < arcs; ++i)
    if (f.colors[i] == 0)
      throw std::logic_error("model leaves arc " + std::to_string(i + 1) + " uncoloured");
  return f;
}

SatResult parse_solver_output(std::string_view output, int num_vars) {
  SatResult r;
  bool verdict = false;
  std::vector<int> lits;
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c")
      continue;
    if (first == "s") {
      std::string word;
      ls >> word;
      verdict = true;
      r.satisfiable = word == "SATISFIABLE";
      continue;
    }
    if (first == "SAT" || first == "UNSAT" || first == "SATISFIABLE" ||
        first == "UNSATISFIABLE") {
      verdict = true;
      r.satisfiable = first == "SAT" || first == "SATISFIABLE";
      continue;
    }
    std::istringstream body(first == "v" ? line.substr(line.find('v') + 1) : line);
    int lit;
    while (body >> lit)
      if (lit != 0)
        lits.push_back(lit);
  }
  if (!verdict)
    throw std::runtime_error("solver output has no SAT/UNSAT verdict");
  if (r.satisfiable) {
    r.model.assign(num_vars + 1, false);
    for (int lit : lits)
      if (std::abs(lit) <= num_vars)
        r.model[std::abs(lit)] = lit > 0;
  }
  return r;
}

SatResult solve_external(const CnfInstance &cnf, const std::string &solver_path) {
  namespace fs = std::filesystem;
  std::random_device rd;
  fs::path file = fs::temp_directory_path() /
                  ("knotcolor-" + std::to_string(rd()) + "-" + std::to_string(rd()) + ".cnf");
  {
    std::ofstream out(file);
    if (!out)
      throw std::runtime_error("cannot write " + file.string());
    out << emit_dimacs(cnf);
  }
  std::string command = "\"" + solver_path + "\" \"" + file.string() + "\" 2>/dev/null";
  std::string output;
  {
    std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) {
      fs::remove(file);
      throw std::runtime_error("cannot run external solver " + solver_path);
    }
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
      output.append(buf.data(), got);
  }
  fs::remove(file);
  SatResult r = parse_solver_output(output, cnf.num_vars);
  if (r.satisfiable && !satisfies(cnf, r.model))
    throw std::runtime_error("external solver returned a model that fails the instance");
  return r;
}

} // namespace knotcolor
