#pragma once

#include <optional>
#include <string>

#include "specs.hpp"

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitNegative = 10; // exhausted / indistinguishable / invalid

struct ColorOptions {
  KnotFlags knot;
  std::string quandle;
  std::string engine; // empty: sat for color, backtrack for count
  std::string solver;
  BudgetFlags budget;
  bool json = false;
  bool check = false;
};
int cmd_color(const ColorOptions &o);
int cmd_count(const ColorOptions &o);

struct EncodeOptions {
  KnotFlags knot;
  std::string quandle;
  std::string output;
  bool no_sb = false;
  bool no_nontrivial = false;
};
int cmd_encode(const EncodeOptions &o);

struct CertifyOptions {
  KnotFlags knot;
  LibraryFlags library;
  BudgetFlags budget;
  bool prefilter = false;
  int jobs = 1;
  bool json = false;
  std::string output; // certificate file
};
int cmd_certify(const CertifyOptions &o);

struct DistinguishOptions {
  std::string first, second; // knot specs
  LibraryFlags library;
  BudgetFlags budget;
  bool count = false;
  bool no_alexander = false;
  bool json = false;
};
int cmd_distinguish(const DistinguishOptions &o);

struct BenchOptions {
  std::string family;
  std::optional<std::string> quandles;
  LibraryFlags library;
  std::string engine = "sat";
  std::string solver;
  BudgetFlags budget;
  int jobs = 1;
  std::string output;
};
int cmd_bench(const BenchOptions &o);

// Standalone DIMACS solver; exits 10 (SAT) / 20 (UNSAT) like common solvers.
int cmd_solve(const std::string &path);

int cmd_verify(const std::string &path, bool json);

} // namespace cli
