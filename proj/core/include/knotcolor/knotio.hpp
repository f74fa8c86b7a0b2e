#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcolor {

using ArcId = int;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One crossing of an oriented diagram. Arc ids are 1-based.
//
// sign +1: colour(under_out) = colour(over) * colour(under_in)
// sign -1: colour(under_in)  = colour(over) * colour(under_out)
struct Crossing {
  ArcId over = 0;
  ArcId under_in = 0;
  ArcId under_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing &, const Crossing &) = default;
};

// A knot diagram as a crossing list over arcs 1..arc_count. Crossing k of a
// Gauss code is crossings[k - 1]. The round unknot is the only 0-crossing
// diagram and has a single arc.
struct KnotDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 1;
  std::string name;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool is_round_unknot() const { return crossings.empty(); }
};

// Throws std::logic_error if the arc incidence invariants fail.
void validate(const KnotDiagram &diagram);

// Closed walk through a diagram: one entry per passage through a crossing.
struct GaussToken {
  int crossing = 0; // 1-based label
  bool over = false;
  int sign = 1;
};
using GaussWord = std::vector<GaussToken>;

KnotDiagram diagram_from_gauss_word(const GaussWord &word);

KnotDiagram parse_gauss(std::string_view text);
std::string format_gauss(const GaussWord &word);

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord &braid);

// Strand permutation of the braid: strand starting at position i (0-based)
// ends at position result[i].
std::vector<int> closure_permutation(const BraidWord &braid);
int closure_components(const BraidWord &braid);
// Throws ParseError unless the closure is a single component.
void require_knot_closure(const BraidWord &braid);

BraidWord torus_braid(int p, int q);
GaussWord braid_gauss_word(const BraidWord &braid);
KnotDiagram braid_to_diagram(const BraidWord &braid);

// Braid moves that preserve the closure.
BraidWord insert_r2(const BraidWord &braid, int generator, int position);
BraidWord markov_stabilize(const BraidWord &braid);
BraidWord rotate_braid(const BraidWord &braid, int shift);

// Same crossings with every sign negated.
KnotDiagram flip_signs(const KnotDiagram &diagram);

// Crossing handedness of a planar realisation of an unsigned Gauss word.
// Returns one sign per crossing label (index 0 = crossing 1), or nullopt if
// no realisation exists. Realisations of composite diagrams are not unique;
// the first one in a fixed enumeration order is returned.
inline constexpr int kMaxRealizeCrossings = 20;
std::optional<std::vector<int>> realize_signs(const GaussWord &word);

KnotDiagram parse_dt(std::string_view text);
GaussWord dt_gauss_word(std::string_view text);

struct FixtureRow {
  std::string name;
  std::string dt_code;
  KnotDiagram diagram;
};

struct FixtureLoad {
  std::vector<FixtureRow> knots;
  std::vector<std::string> rejected; // "line N (name): reason"
};

// CSV with a `name,dt_code` header. Rows that fail parse_dt are reported and
// skipped.
FixtureLoad load_dt_fixtures(const std::string &path);
FixtureLoad parse_dt_fixtures(std::string_view csv);

} // namespace knotcolor
