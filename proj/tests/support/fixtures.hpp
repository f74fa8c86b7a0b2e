#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcolor/knotio.hpp"
#include "knotcolor/quandle.hpp"

namespace fixtures {

struct Knot {
  std::string name;
  std::string family; // knot type shared by all its presentations, e.g. "3_1"
  knotcolor::KnotDiagram diagram;
  std::optional<knotcolor::BraidWord> braid;

  bool unknot() const { return family == "0_1"; }
};

// Directory holding knots.csv, the golden CNF file and sample libraries.
std::string data_dir();

// Every presentation used by the cross-engine tests: unknot presentations,
// several presentations each of 3_1 and 4_1, torus knots and DT-coded knots
// from knots.csv. All have at most 8 crossings.
const std::vector<Knot> &knots();
std::vector<Knot> of_family(const std::string &family);
const Knot &named(const std::string &name);

// Library quandles of size <= 6 from the default generated library.
const std::vector<knotcolor::Quandle> &small_quandles();

} // namespace fixtures
