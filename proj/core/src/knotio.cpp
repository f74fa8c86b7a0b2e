#include "knotcolor/knotio.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace knotcolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i)
      out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<int> to_int(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    return std::nullopt;
  return value;
}

// Accepts '+', '-' and the unicode minus sign.
std::optional<int> parse_sign_suffix(std::string_view &token) {
  if (token.size() >= 3 && token.substr(token.size() - 3) == "\xE2\x88\x92") {
    token.remove_suffix(3);
    return -1;
  }
  if (token.empty())
    return std::nullopt;
  char c = token.back();
  if (c == '+' || c == '-') {
    token.remove_suffix(1);
    return c == '+' ? 1 : -1;
  }
  return std::nullopt;
}

std::string where(int crossing) { return "crossing " + std::to_string(crossing); }

} // namespace

void validate(const KnotDiagram &d) {
  const int m = d.crossing_count();
  if (m == 0) {
    if (d.arc_count != 1)
      throw std::logic_error("0-crossing diagram must have exactly one arc");
    return;
  }
  if (d.arc_count != m)
    throw std::logic_error("arc count " + std::to_string(d.arc_count) +
                           " differs from crossing count " + std::to_string(m));
  std::vector<int> in_seen(m + 1, 0), out_seen(m + 1, 0);
  for (int k = 0; k < m; ++k) {
    const Crossing &c = d.crossings[k];
    for (ArcId a : {c.over, c.under_in, c.under_out})
      if (a < 1 || a > m)
        throw std::logic_error(where(k + 1) + " references arc out of range");
    if (c.sign != 1 && c.sign != -1)
      throw std::logic_error(where(k + 1) + " has sign other than +1/-1");
    ++in_seen[c.under_in];
    ++out_seen[c.under_out];
  }
  for (int a = 1; a <= m; ++a)
    if (in_seen[a] != 1 || out_seen[a] != 1)
      throw std::logic_error("arc " + std::to_string(a) +
                             " must end and begin at exactly one under-passage");
}

KnotDiagram diagram_from_gauss_word(const GaussWord &word) {
  KnotDiagram d;
  if (word.empty()) {
    d.arc_count = 1;
    return d;
  }
  const int m = static_cast<int>(word.size() / 2);
  d.crossings.assign(m, Crossing{});
  d.arc_count = m;
  // Tokens before the first U belong to the run after the last U.
  int current = m;
  int started = 0;
  for (const GaussToken &t : word) {
    Crossing &c = d.crossings[t.crossing - 1];
    c.sign = t.sign;
    if (t.over) {
      c.over = current;
    } else {
      c.under_in = current;
      current = ++started;
      c.under_out = current;
    }
  }
  validate(d);
  return d;
}

KnotDiagram parse_gauss(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "UNKNOT") {
    KnotDiagram d;
    d.name = "unknot";
    return d;
  }
  if (tokens.empty())
    throw ParseError("empty Gauss code (use UNKNOT for the 0-crossing diagram)");

  GaussWord word;
  for (std::string_view tok : tokens) {
    std::string_view body = tok;
    if (body.empty() || (body[0] != 'O' && body[0] != 'U'))
      throw ParseError("bad Gauss token '" + std::string(tok) + "'");
    bool over = body[0] == 'O';
    body.remove_prefix(1);
    auto sign = parse_sign_suffix(body);
    if (!sign)
      throw ParseError("Gauss token '" + std::string(tok) + "' lacks a +/- sign");
    auto label = to_int(body);
    if (!label || *label < 1)
      throw ParseError("bad crossing label in '" + std::string(tok) + "'");
    word.push_back({*label, over, *sign});
  }

  const int max_label = std::max_element(word.begin(), word.end(), [](auto &a, auto &b) {
                          return a.crossing < b.crossing;
                        })->crossing;
  std::vector<int> count(max_label + 1, 0), overs(max_label + 1, 0), sign(max_label + 1, 0);
  for (const auto &t : word) {
    ++count[t.crossing];
    overs[t.crossing] += t.over ? 1 : 0;
    if (sign[t.crossing] == 0)
      sign[t.crossing] = t.sign;
    else if (sign[t.crossing] != t.sign)
      throw ParseError("crossing " + std::to_string(t.crossing) + " has mismatched signs");
  }
  for (int k = 1; k <= max_label; ++k) {
    if (count[k] != 2)
      throw ParseError("label " + std::to_string(k) + " appears " + std::to_string(count[k]) +
                       " times (expected 2)");
    if (overs[k] != 1)
      throw ParseError("label " + std::to_string(k) + " needs exactly one O and one U token");
  }
  return diagram_from_gauss_word(word);
}

std::string format_gauss(const GaussWord &word) {
  if (word.empty())
    return "UNKNOT";
  std::string out;
  for (const auto &t : word) {
    if (!out.empty())
      out += ' ';
    out += t.over ? 'O' : 'U';
    out += std::to_string(t.crossing);
    out += t.sign > 0 ? '+' : '-';
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("braid must look like '<strands>: <letters>'");
  auto strands = to_int(trim(text.substr(0, colon)));
  if (!strands || *strands < 1)
    throw ParseError("bad strand count in braid '" + std::string(text) + "'");
  BraidWord b;
  b.strands = *strands;
  for (std::string_view tok : split_ws(text.substr(colon + 1))) {
    auto letter = to_int(tok);
    if (!letter)
      throw ParseError("non-integer braid letter '" + std::string(tok) + "'");
    if (*letter == 0)
      throw ParseError("braid letter 0 is not a generator");
    if (std::abs(*letter) >= b.strands)
      throw ParseError("generator index " + std::to_string(std::abs(*letter)) +
                       " out of range for " + std::to_string(b.strands) + " strands");
    b.letters.push_back(*letter);
  }
  return b;
}

std::string format_braid(const BraidWord &b) {
  std::string out = std::to_string(b.strands) + ":";
  for (int l : b.letters)
    out += " " + std::to_string(l);
  return out;
}

std::vector<int> closure_permutation(const BraidWord &b) {
  std::vector<int> at(b.strands); // at[position] = strand currently there
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(b.strands);
  for (int pos = 0; pos < b.strands; ++pos)
    perm[at[pos]] = pos;
  return perm;
}

int closure_components(const BraidWord &b) {
  auto perm = closure_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (size_t x = s; !seen[x]; x = perm[x])
      seen[x] = true;
  }
  return cycles;
}

void require_knot_closure(const BraidWord &b) {
  int comps = closure_components(b);
  if (comps != 1)
    throw ParseError("braid closure has " + std::to_string(comps) + " components, not a knot");
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 1)
    throw std::invalid_argument("torus_braid needs p >= 2 and q >= 1");
  BraidWord b;
  b.strands = p;
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i)
      b.letters.push_back(i);
  return b;
}

// Walk the closure from the top of strand position 0. A positive letter on
// positions (i, i+1) carries the strand at i over to i+1 and the strand at
// i+1 under to i; a negative letter does the opposite.
GaussWord braid_gauss_word(const BraidWord &b) {
  require_knot_closure(b);
  GaussWord word;
  if (b.letters.empty())
    return word;
  int pos = 0;
  do {
    for (int idx = 0; idx < b.length(); ++idx) {
      int l = b.letters[idx];
      int i = std::abs(l) - 1;
      if (pos != i && pos != i + 1)
        continue;
      bool from_left = pos == i;
      bool over = (l > 0) == from_left;
      word.push_back({idx + 1, over, l > 0 ? 1 : -1});
      pos = from_left ? i + 1 : i;
    }
  } while (pos != 0);
  return word;
}

KnotDiagram braid_to_diagram(const BraidWord &b) {
  KnotDiagram d = diagram_from_gauss_word(braid_gauss_word(b));
  d.name = format_braid(b);
  return d;
}

BraidWord insert_r2(const BraidWord &b, int generator, int position) {
  if (generator < 1 || generator > b.strands - 1)
    throw std::out_of_range("generator index out of range");
  if (position < 0 || position > b.length())
    throw std::out_of_range("insertion position out of range");
  BraidWord out = b;
  out.letters.insert(out.letters.begin() + position, {generator, -generator});
  return out;
}

BraidWord markov_stabilize(const BraidWord &b) {
  BraidWord out = b;
  out.letters.push_back(b.strands);
  out.strands = b.strands + 1;
  return out;
}

BraidWord rotate_braid(const BraidWord &b, int shift) {
  BraidWord out = b;
  if (b.letters.empty())
    return out;
  int n = b.length();
  int s = ((shift % n) + n) % n;
  std::rotate(out.letters.begin(), out.letters.begin() + s, out.letters.end());
  return out;
}

KnotDiagram flip_signs(const KnotDiagram &d) {
  KnotDiagram out = d;
  for (auto &c : out.crossings)
    c.sign = -c.sign;
  return out;
}

// The word is a closed curve with 2n edges; edge p runs from passage p to
// passage p+1. Each edge end is a "port". For a choice of local orientation
// at every crossing the ports get a rotation system, and the curve is planar
// exactly when the rotation system has n + 2 faces.
std::optional<std::vector<int>> realize_signs(const GaussWord &word) {
  const int length = static_cast<int>(word.size());
  const int n = length / 2;
  if (n == 0)
    return std::vector<int>{};
  if (n > kMaxRealizeCrossings)
    throw ParseError("diagram too large for sign reconstruction (" + std::to_string(n) +
                     " crossings)");

  std::vector<int> first(n, -1), second(n, -1);
  for (int p = 0; p < length; ++p) {
    int c = word[p].crossing - 1;
    (first[c] < 0 ? first[c] : second[c]) = p;
  }
  auto tail = [&](int p) { return 2 * p; };
  auto head = [&](int p) { return 2 * ((p - 1 + length) % length) + 1; };

  const int ports = 2 * length;
  std::vector<int> rot(ports);
  std::vector<char> seen(ports);
  std::vector<int> orient(n, 1);

  for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
    for (int c = 1; c < n; ++c)
      orient[c] = (mask >> (c - 1)) & 1 ? -1 : 1;
    for (int c = 0; c < n; ++c) {
      int out1 = tail(first[c]), in1 = head(first[c]);
      int out2 = tail(second[c]), in2 = head(second[c]);
      // Counter-clockwise: the second pass crosses the first from right to
      // left when orient = +1.
      std::array<int, 4> ring = orient[c] > 0 ? std::array<int, 4>{out1, out2, in1, in2}
                                              : std::array<int, 4>{out1, in2, in1, out2};
      for (int k = 0; k < 4; ++k)
        rot[ring[k]] = ring[(k + 1) % 4];
    }
    std::fill(seen.begin(), seen.end(), 0);
    int faces = 0;
    for (int start = 0; start < ports; ++start) {
      if (seen[start])
        continue;
      ++faces;
      for (int p = start; !seen[p]; p = rot[p ^ 1])
        seen[p] = 1;
    }
    if (faces == n + 2) {
      std::vector<int> signs(n);
      for (int c = 0; c < n; ++c)
        signs[c] = word[first[c]].over ? orient[c] : -orient[c];
      return signs;
    }
  }
  return std::nullopt;
}

GaussWord dt_gauss_word(std::string_view text) {
  std::vector<int> code;
  for (std::string_view tok : split_ws(text)) {
    auto v = to_int(tok);
    if (!v)
      throw ParseError("non-integer DT entry '" + std::string(tok) + "'");
    code.push_back(*v);
  }
  if (code.empty())
    throw ParseError("empty DT code");
  const int n = static_cast<int>(code.size());
  std::vector<bool> used(2 * n + 1, false);
  for (int v : code) {
    int a = std::abs(v);
    if (a % 2 != 0)
      throw ParseError("DT entry " + std::to_string(v) + " is odd");
    if (a < 2 || a > 2 * n)
      throw ParseError("DT entry " + std::to_string(v) + " out of range");
    if (used[a])
      throw ParseError("DT entry " + std::to_string(a) + " repeated");
    used[a] = true;
  }
  GaussWord word(2 * n);
  for (int i = 0; i < n; ++i) {
    bool odd_over = code[i] > 0;
    word[2 * i] = {i + 1, odd_over, 1};
    word[std::abs(code[i]) - 1] = {i + 1, !odd_over, 1};
  }
  auto signs = realize_signs(word);
  if (!signs)
    throw ParseError("DT code '" + std::string(trim(text)) + "' is not realizable");
  for (auto &t : word)
    t.sign = (*signs)[t.crossing - 1];
  return word;
}

KnotDiagram parse_dt(std::string_view text) {
  KnotDiagram d = diagram_from_gauss_word(dt_gauss_word(text));
  d.name = "dt:" + std::string(trim(text));
  return d;
}

FixtureLoad parse_dt_fixtures(std::string_view csv) {
  FixtureLoad out;
  std::istringstream in{std::string(csv)};
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view row = trim(line);
    if (row.empty() || row.front() == '#')
      continue;
    if (!header_seen) {
      header_seen = true;
      if (row == "name,dt_code")
        continue;
      throw ParseError("fixture CSV must start with header 'name,dt_code'");
    }
    auto comma = row.find(',');
    if (comma == std::string_view::npos) {
      out.rejected.push_back("line " + std::to_string(lineno) + ": missing comma");
      continue;
    }
    std::string name(trim(row.substr(0, comma)));
    std::string_view dt = trim(row.substr(comma + 1));
    if (dt.size() >= 2 && dt.front() == '"' && dt.back() == '"')
      dt = trim(dt.substr(1, dt.size() - 2));
    try {
      KnotDiagram d = parse_dt(dt);
      d.name = name;
      out.knots.push_back({name, std::string(dt), std::move(d)});
    } catch (const ParseError &e) {
      out.rejected.push_back("line " + std::to_string(lineno) + " (" + name + "): " + e.what());
    }
  }
  return out;
}

FixtureLoad load_dt_fixtures(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("cannot open fixture file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_dt_fixtures(ss.str());
}

} // namespace knotcolor
