#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotcolor/quandle.hpp"

namespace knotcolor {

// Families to generate. Parsed from a comma-separated token list, e.g.
// "dihedral:13,affine:12,conj:S4,conj:A5,simple":
//   dihedral:P   dihedral(p) for odd primes p <= P
//   affine:N     connected affine(n, t) for 2 <= n <= N
//   conj:G       every conjugacy class of G in {S3, S4, S5, A4, A5}
//   connected    keep only connected quandles (default for generation)
//   all          keep non-connected quandles too
//   simple       keep only simple quandles
struct LibrarySpec {
  int dihedral_max_prime = 0;
  int affine_max_order = 0;
  std::vector<std::string> groups;
  bool connected_only = true;
  bool simple_only = false;
};

LibrarySpec parse_library_spec(std::string_view text);

// Used when no library is given on the command line or in the environment.
inline constexpr const char *kDefaultLibrarySpec = "dihedral:13,affine:12,conj:S4,conj:A4";

// Deduplicates by canonical table (exact isomorph rejection for size <= 8),
// then sorts by (size, canonical table). Duplicates keep the first name and
// inherit the affine tag of any copy.
std::vector<Quandle> normalize_library(std::vector<Quandle> quandles);

std::vector<Quandle> library_generate(const LibrarySpec &spec);
std::vector<Quandle> library_generate(std::string_view spec);

struct LibraryLoad {
  std::vector<Quandle> quandles;
  std::vector<std::string> rejected; // "<name>: <violation>"
};

// Text format: blank-line separated records
//   quandle <name> <q>
//   <q rows of q integers>
// '#' starts a comment. Loaded quandles that are connected and medial are
// tagged affine. Records failing the axioms are rejected and reported; a
// structurally malformed file throws LibraryFormatError.
class LibraryFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

LibraryLoad library_parse(std::string_view text);
LibraryLoad library_load(const std::string &path);
std::string library_format(const std::vector<Quandle> &quandles);

} // namespace knotcolor
