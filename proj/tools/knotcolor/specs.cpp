#include "specs.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>

#include "knotcolor/library.hpp"

namespace cli {

using namespace knotcolor;

namespace {

int to_int(const std::string &s, const std::string &what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end - start));
    if (end == std::string::npos)
      return out;
    start = end + 1;
  }
}

// Splits "head:rest" at the first colon.
std::pair<std::string, std::string> head_rest(const std::string &s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

// "path:name" where the path itself may contain colons.
std::pair<std::string, std::string> path_and_name(const std::string &s, const std::string &what) {
  auto colon = s.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
    throw UsageError(what + " must look like <path>:<name>, got '" + s + "'");
  return {s.substr(0, colon), s.substr(colon + 1)};
}

bool is_prime(int n) {
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

GroupTable group_named(const std::string &name) {
  if (name == "S3")
    return symmetric_group(3);
  if (name == "S4")
    return symmetric_group(4);
  if (name == "S5")
    return symmetric_group(5);
  if (name == "A4")
    return alternating_group(4);
  if (name == "A5")
    return alternating_group(5);
  throw UsageError("unknown group '" + name + "'");
}

KnotInput from_braid(const BraidWord &b) {
  KnotInput in;
  in.diagram = braid_to_diagram(b);
  in.braid = b;
  return in;
}

KnotInput from_fixture(const std::string &arg) {
  auto [path, name] = path_and_name(arg, "fixture");
  FixtureLoad load = load_dt_fixtures(path);
  for (auto &row : load.knots)
    if (row.name == name)
      return {std::move(row.diagram), std::nullopt};
  throw UsageError("no knot named '" + name + "' in " + path);
}

KnotInput from_torus(const std::string &arg) {
  auto parts = split(arg, ',');
  if (parts.size() != 2)
    throw UsageError("torus knot must look like <p>,<q>");
  BraidWord b = torus_braid(to_int(parts[0], "torus p"), to_int(parts[1], "torus q"));
  KnotInput in = from_braid(b);
  in.diagram.name = "T(" + parts[0] + "," + parts[1] + ")";
  return in;
}

} // namespace

KnotInput knot_from_spec(const std::string &spec) {
  if (spec == "unknot" || spec == "UNKNOT")
    return {parse_gauss("UNKNOT"), std::nullopt};
  auto [kind, arg] = head_rest(spec);
  if (kind == "gauss") {
    KnotDiagram d = parse_gauss(arg);
    d.name = arg;
    return {std::move(d), std::nullopt};
  }
  if (kind == "braid")
    return from_braid(parse_braid(arg));
  if (kind == "torus")
    return from_torus(arg);
  if (kind == "dt")
    return {parse_dt(arg), std::nullopt};
  if (kind == "fixture")
    return from_fixture(arg);
  throw UsageError("unknown knot spec '" + spec +
                   "' (expected gauss:, braid:, torus:, dt:, fixture: or unknot)");
}

KnotInput knot_from_flags(const KnotFlags &f) {
  int given = !f.gauss.empty() + !f.braid.empty() + !f.torus.empty() + !f.dt.empty() +
              !f.fixture.empty();
  if (given != 1)
    throw UsageError("give exactly one of --gauss, --braid, --torus, --dt, --fixture");
  if (!f.gauss.empty())
    return knot_from_spec("gauss:" + f.gauss);
  if (!f.braid.empty())
    return knot_from_spec("braid:" + f.braid);
  if (!f.torus.empty())
    return knot_from_spec("torus:" + f.torus);
  if (!f.dt.empty())
    return knot_from_spec("dt:" + f.dt);
  return knot_from_spec("fixture:" + f.fixture);
}

Quandle quandle_from_spec(const std::string &spec) {
  auto parts = split(spec, ':');
  const std::string &kind = parts[0];
  if (kind == "dihedral" && parts.size() == 2)
    return dihedral(to_int(parts[1], "dihedral order"));
  if (kind == "affine" && parts.size() == 3) {
    try {
      return affine(to_int(parts[1], "affine order"), to_int(parts[2], "affine multiplier"));
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }
  if (kind == "trivial" && parts.size() == 2)
    return trivial_quandle(to_int(parts[1], "trivial quandle size"));
  if (kind == "conj" && parts.size() == 3)
    return conjugation(group_named(parts[1]), to_int(parts[2], "group element"));
  if (kind == "file") {
    auto [path, name] = path_and_name(spec.substr(5), "quandle file");
    for (auto &q : library_load(path).quandles)
      if (q.name() == name)
        return q;
    throw UsageError("no quandle named '" + name + "' in " + path);
  }
  throw UsageError("unknown quandle spec '" + spec + "'");
}

std::vector<Quandle> quandle_list(const std::string &specs) {
  std::vector<Quandle> out;
  for (const auto &item : split(specs, ',')) {
    if (item.empty())
      continue;
    auto [kind, arg] = head_rest(item);
    if (kind == "dihedral-primes") {
      int bound = to_int(arg, "prime bound");
      for (int p = 2; p <= bound; ++p)
        if (is_prime(p))
          out.push_back(dihedral(p));
    } else {
      out.push_back(quandle_from_spec(item));
    }
  }
  return out;
}

std::vector<Quandle> resolve_library(const LibraryFlags &flags) {
  std::string path = flags.path;
  if (path.empty() && flags.generate.empty())
    if (const char *env = std::getenv("KNOTCOLOR_LIBRARY"); env && *env)
      path = env;
  if (!path.empty()) {
    LibraryLoad load = library_load(path);
    for (const auto &r : load.rejected)
      std::cerr << "knotcolor: rejected library record " << r << "\n";
    return load.quandles;
  }
  try {
    return library_generate(flags.generate.empty() ? kDefaultLibrarySpec : flags.generate);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

SearchLimits limits_of(const BudgetFlags &f) {
  SearchLimits l;
  l.max_seconds = f.seconds;
  l.max_nodes = f.nodes;
  l.max_assignments = f.assignments;
  return l;
}

std::vector<FamilyMember> family_from_spec(const std::string &spec) {
  auto [kind, arg] = head_rest(spec);
  std::vector<FamilyMember> out;
  if (kind == "T2" || kind == "T3") {
    int p = kind == "T2" ? 2 : 3;
    for (const auto &n : split(arg, ',')) {
      KnotInput k = from_torus(std::to_string(p) + "," + n);
      out.push_back({"torus-" + std::to_string(p) + "-" + n, std::move(k)});
    }
  } else if (kind == "fixtures") {
    FixtureLoad load = load_dt_fixtures(arg);
    for (const auto &r : load.rejected)
      std::cerr << "knotcolor: skipped fixture " << r << "\n";
    for (auto &row : load.knots)
      out.push_back({row.name, {std::move(row.diagram), std::nullopt}});
  } else {
    throw UsageError("unknown family '" + spec + "' (expected T2:, T3: or fixtures:)");
  }
  if (out.empty())
    throw UsageError("family '" + spec + "' is empty");
  return out;
}

} // namespace cli
