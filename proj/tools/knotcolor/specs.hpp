#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcolor/knotio.hpp"
#include "knotcolor/limits.hpp"
#include "knotcolor/quandle.hpp"

namespace cli {

// Bad command-line input; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct KnotInput {
  knotcolor::KnotDiagram diagram;
  std::optional<knotcolor::BraidWord> braid;
};

// "gauss:<code>", "braid:<n>: <letters>", "torus:<p>,<q>", "dt:<code>",
// "fixture:<csv path>:<name>" or "unknot".
KnotInput knot_from_spec(const std::string &spec);

struct KnotFlags {
  std::string gauss, braid, torus, dt, fixture;
};
// Exactly one flag must be set.
KnotInput knot_from_flags(const KnotFlags &flags);

// "dihedral:<n>", "affine:<n>:<t>", "trivial:<n>", "conj:<group>:<element>"
// or "file:<path>:<name>".
knotcolor::Quandle quandle_from_spec(const std::string &spec);

// Comma-separated quandle specs; "dihedral-primes:<P>" expands to dihedral(p)
// for every prime p <= P. Kept in the given order.
std::vector<knotcolor::Quandle> quandle_list(const std::string &specs);

struct LibraryFlags {
  std::string path;     // library file
  std::string generate; // generation spec
};
// Library file, else generation spec, else $KNOTCOLOR_LIBRARY, else the
// default generation spec. Load rejections are written to stderr.
std::vector<knotcolor::Quandle> resolve_library(const LibraryFlags &flags);

struct BudgetFlags {
  double seconds = 0;
  uint64_t nodes = 0;
  uint64_t assignments = knotcolor::SearchLimits{}.max_assignments;
};
knotcolor::SearchLimits limits_of(const BudgetFlags &flags);

// Knot families for bench: "T2:<n>,<n>,..", "T3:<n>,..", "fixtures:<csv>".
struct FamilyMember {
  std::string name;
  KnotInput knot;
};
std::vector<FamilyMember> family_from_spec(const std::string &spec);

} // namespace cli
