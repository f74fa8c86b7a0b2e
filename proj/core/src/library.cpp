#include "knotcolor/library.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace knotcolor {

namespace {

bool is_prime(int n) {
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

int parse_positive(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

GroupTable named_group(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'S' || name[0] == 'A')) {
    int n = name[1] - '0';
    if (name[0] == 'S' && n >= 3 && n <= 5)
      return symmetric_group(n);
    if (name[0] == 'A' && n >= 4 && n <= 5)
      return alternating_group(n);
  }
  throw std::invalid_argument("unknown group '" + std::string(name) +
                              "' (supported: S3, S4, S5, A4, A5)");
}

} // namespace

LibrarySpec parse_library_spec(std::string_view text) {
  LibrarySpec spec;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view tok = text.substr(start, end - start);
    start = end + 1;
    if (tok.empty())
      continue;
    auto colon = tok.find(':');
    std::string_view key = tok.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? "" : tok.substr(colon + 1);
    if (key == "dihedral")
      spec.dihedral_max_prime = parse_positive(arg, "dihedral bound");
    else if (key == "affine")
      spec.affine_max_order = parse_positive(arg, "affine bound");
    else if (key == "conj") {
      named_group(arg);
      spec.groups.emplace_back(arg);
    } else if (key == "connected")
      spec.connected_only = true;
    else if (key == "all")
      spec.connected_only = false;
    else if (key == "simple")
      spec.simple_only = true;
    else
      throw std::invalid_argument("unknown library family '" + std::string(tok) + "'");
  }
  return spec;
}

std::vector<Quandle> normalize_library(std::vector<Quandle> quandles) {
  struct Entry {
    Table key;
    size_t first;
  };
  std::map<std::pair<int, Table>, size_t> seen;
  std::vector<Entry> kept;
  std::vector<Quandle> out;
  for (size_t i = 0; i < quandles.size(); ++i) {
    Table key = canonical_table(quandles[i]);
    auto [it, inserted] = seen.try_emplace({quandles[i].size(), key}, out.size());
    if (inserted) {
      out.push_back(quandles[i]);
      kept.push_back({std::move(key), out.size() - 1});
    } else if (quandles[i].affine()) {
      out[it->second].mark_affine();
    }
  }
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (out[a].size() != out[b].size())
      return out[a].size() < out[b].size();
    return kept[a].key < kept[b].key;
  });
  std::vector<Quandle> sorted;
  sorted.reserve(out.size());
  for (size_t i : order)
    sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<Quandle> library_generate(const LibrarySpec &spec) {
  std::vector<Quandle> raw;
  for (int p = 3; p <= spec.dihedral_max_prime; ++p)
    if (is_prime(p))
      raw.push_back(dihedral(p));
  for (int n = 2; n <= spec.affine_max_order; ++n)
    for (int t = 1; t < n; ++t)
      if (std::gcd(t, n) == 1 && affine_connected_by_formula(n, t))
        raw.push_back(affine(n, t));
  for (const auto &name : spec.groups) {
    GroupTable g = named_group(name);
    for (int rep : class_representatives(g))
      raw.push_back(conjugation(g, rep));
  }
  std::vector<Quandle> filtered;
  for (auto &q : raw) {
    if (q.size() < 2)
      continue;
    if (spec.connected_only && !q.connected())
      continue;
    if (spec.simple_only && !is_simple(q))
      continue;
    filtered.push_back(std::move(q));
  }
  return normalize_library(std::move(filtered));
}

std::vector<Quandle> library_generate(std::string_view spec) {
  return library_generate(parse_library_spec(spec));
}

LibraryLoad library_parse(std::string_view text) {
  // Strip comments, keep line structure for record boundaries.
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos)
        line.erase(hash);
      lines.push_back(line);
    }
  }
  auto blank = [](const std::string &s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  };

  LibraryLoad out;
  std::vector<Quandle> accepted;
  size_t i = 0;
  while (i < lines.size()) {
    if (blank(lines[i])) {
      ++i;
      continue;
    }
    std::istringstream header(lines[i]);
    std::string keyword, name;
    int size = 0;
    if (!(header >> keyword >> name >> size) || keyword != "quandle" || size < 1)
      throw LibraryFormatError("line " + std::to_string(i + 1) +
                               ": expected 'quandle <name> <size>'");
    Table table;
    table.reserve(static_cast<size_t>(size) * size);
    for (int r = 0; r < size; ++r) {
      ++i;
      if (i >= lines.size() || blank(lines[i]))
        throw LibraryFormatError("quandle " + name + ": expected " + std::to_string(size) +
                                 " rows");
      std::istringstream row(lines[i]);
      int v = 0, count = 0;
      while (row >> v) {
        table.push_back(v);
        ++count;
      }
      if (!row.eof() || count != size)
        throw LibraryFormatError("quandle " + name + ": row " + std::to_string(r + 1) +
                                 " must have " + std::to_string(size) + " integers");
    }
    ++i;
    if (auto violation = check_axioms(table, size)) {
      out.rejected.push_back(name + ": " + describe(*violation));
      continue;
    }
    Quandle q(std::move(table), name);
    if (q.connected() && is_medial(q))
      q.mark_affine();
    accepted.push_back(std::move(q));
  }
  out.quandles = normalize_library(std::move(accepted));
  return out;
}

LibraryLoad library_load(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw LibraryFormatError("cannot open library file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return library_parse(ss.str());
}

std::string library_format(const std::vector<Quandle> &quandles) {
  std::ostringstream out;
  bool first = true;
  for (const auto &q : quandles) {
    if (!first)
      out << '\n';
    first = false;
    out << "quandle " << (q.name().empty() ? "unnamed" : q.name()) << ' ' << q.size() << '\n';
    for (int a = 1; a <= q.size(); ++a) {
      for (int b = 1; b <= q.size(); ++b)
        out << (b > 1 ? " " : "") << q.op(a, b);
      out << '\n';
    }
  }
  return out.str();
}

} // namespace knotcolor
