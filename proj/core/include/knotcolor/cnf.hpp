#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotcolor/coloring.hpp"
#include "knotcolor/knotio.hpp"
#include "knotcolor/limits.hpp"
#include "knotcolor/quandle.hpp"

namespace knotcolor {

struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// v_{arc,colour} = (arc - 1) * q + colour
inline int cnf_var(int arc, int color, int q) { return (arc - 1) * q + color; }

struct EncodeOptions {
  bool symmetry_break = true;
  bool nontrivial = true;
};

// Clause order:
//  1. per arc: at-least-one, then pairwise at-most-one (c < d)
//  2. if nontrivial: for each colour c, not every arc is c
//  3. per crossing, all (c, d) row-major: v_{over,c} & v_{j,d} -> v_{k,c*d}
//     with (j, k) = (under_in, under_out) for sign +1, swapped for sign -1
//  4. if symmetry_break: unit clause v_{1,1}
CnfInstance encode_cnf(const KnotDiagram &diagram, const Quandle &q, EncodeOptions options = {});

std::string emit_dimacs(const CnfInstance &instance);
CnfInstance parse_dimacs(std::string_view text);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> model; // model[var], index 0 unused
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  uint64_t conflicts = 0;
};

// DPLL: unit propagation to fixpoint, branch on the lowest unassigned
// variable trying true first, chronological backtracking. max_nodes bounds
// the number of decisions.
SatResult sat_decide(const CnfInstance &instance, const SearchLimits &limits = {});

bool satisfies(const CnfInstance &instance, const std::vector<bool> &model);

Coloring decode_model(const std::vector<bool> &model, int arcs, int q);

// Writes the instance to a temporary file, runs `solver <file>` and parses
// either competition output ("s SATISFIABLE" + "v ..." lines) or MiniSat
// result-file style ("SAT" / "UNSAT" + one model line).
SatResult solve_external(const CnfInstance &instance, const std::string &solver_path);
SatResult parse_solver_output(std::string_view output, int num_vars);

} // namespace knotcolor
