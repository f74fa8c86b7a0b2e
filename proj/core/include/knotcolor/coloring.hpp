#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotcolor/knotio.hpp"
#include "knotcolor/limits.hpp"
#include "knotcolor/quandle.hpp"

namespace knotcolor {

struct Coloring {
  std::vector<int> colors; // colors[arc - 1], values 1..q

  int color(ArcId arc) const { return colors[arc - 1]; }
  friend bool operator==(const Coloring &, const Coloring &) = default;
};

// 1-based index of the first crossing whose constraint fails.
std::optional<int> first_violation(const KnotDiagram &diagram, const Quandle &q,
                                   const Coloring &coloring);
bool is_coloring(const KnotDiagram &diagram, const Quandle &q, const Coloring &coloring);
bool is_nontrivial(const Coloring &coloring);

enum class Mode { decide, count };

struct EngineResult {
  uint64_t nontrivial = 0; // count mode: all nontrivial colourings; decide: 0 or 1
  std::optional<Coloring> witness;
  uint64_t work = 0; // assignments, nodes or decisions, engine specific

  bool colorable() const { return nontrivial > 0; }
};

// Exhaustive q^arcs scan; the reference the other engines are checked against.
EngineResult color_brute(const KnotDiagram &diagram, const Quandle &q, Mode mode,
                         const SearchLimits &limits = {});

// Arcs are branched on in a fixed order (see branch_order) and every crossing
// with two coloured arcs forces the third by lookup or left division.
// pin_first fixes arc 1 to colour 1.
EngineResult color_backtrack(const KnotDiagram &diagram, const Quandle &q, Mode mode,
                             const SearchLimits &limits = {}, bool pin_first = false);
std::vector<ArcId> branch_order(const KnotDiagram &diagram);

// Enumerates q^strands colourings of the braid's top and propagates them
// through the word. Throws ParseError for link closures.
EngineResult color_braid(const BraidWord &braid, const Quandle &q, Mode mode,
                         const SearchLimits &limits = {});

// Nontrivial colouring found by the SAT encoding (symmetry broken when q is
// connected), or nullopt.
std::optional<Coloring> find_coloring(const KnotDiagram &diagram, const Quandle &q,
                                      const SearchLimits &limits = {});
bool colorable(const KnotDiagram &diagram, const Quandle &q, const SearchLimits &limits = {});

// col_Q(K): pinned backtracking count times q for connected q, otherwise the
// unpinned count.
uint64_t count_colorings(const KnotDiagram &diagram, const Quandle &q,
                         const SearchLimits &limits = {});

// Composes a colouring with a map on colours (e.g. a factor projection or a
// subquandle embedding).
Coloring push_forward(const Coloring &coloring, const std::vector<int> &element_map);

} // namespace knotcolor
