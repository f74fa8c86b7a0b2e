// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "knotcolor/alexander.hpp"
#include "knotcolor/cnf.hpp"
#include "knotcolor/coloring.hpp"
#include "knotcolor/library.hpp"
#include "knotcolor/recognize.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace knotcolor;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitAxioms = 1.0;
constexpr double kLimitFacts = 1.0;
constexpr double kLimitCounts = 1.0;
constexpr double kLimitMatrix = 120.0;
constexpr double kLimitInvariance = 60.0;
constexpr double kLimitFox = 60.0;
constexpr double kLimitTorus = 60.0;
constexpr double kLimitPrefilter = 60.0;
constexpr double kLimitCnf = 1.0;
constexpr double kLimitSimple = 10.0;
constexpr double kLimitSoundness = 60.0;

// Largest crossing count admitted to the equivalence matrix.
constexpr int kMatrixMaxCrossings = 8;
// Largest quandle admitted to the equivalence matrix.
constexpr int kMatrixMaxQuandle = 6;
// Minimum number of knots the matrix must cover.
constexpr size_t kMatrixMinKnots = 10;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit, const std::function<Outcome()> &fn) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception &e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit) {
    out.ok = false;
    out.detail = "over the time limit";
  }
  if (!out.ok)
    ++failures;
  std::printf("%s %2d %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id,
              title.c_str(), secs, limit, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

const KnotDiagram &knot(const std::string &name) { return fixtures::named(name).diagram; }

bool witness_holds(const Table &t, int n, const AxiomViolation &v) {
  auto op = [&](int a, int b) { return t[(a - 1) * n + (b - 1)]; };
  if (auto *x = std::get_if<NotIdempotent>(&v))
    return op(x->a, x->a) != x->a;
  if (auto *x = std::get_if<NotLeftInvertible>(&v))
    return x->b != x->b_prime && op(x->a, x->b) == op(x->a, x->b_prime);
  if (auto *x = std::get_if<NotDistributive>(&v))
    return op(x->a, op(x->b, x->c)) != op(op(x->a, x->b), op(x->a, x->c));
  return false;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0)
    return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

std::string label(const std::string &knot, const Quandle &q) { return knot + " / " + q.name(); }

} // namespace

int main() {
  const auto library = library_generate(kDefaultLibrarySpec);

  criterion(1, "quandle axioms: families accepted, 100 mutations of dihedral(5) rejected",
            kLimitAxioms, [] {
              Outcome o;
              for (int n = 1; n <= 30; ++n) {
                o.require(!check_axioms(dihedral(n).table(), n), "dihedral(" + std::to_string(n) + ")");
                for (int t = 0; t < n; ++t)
                  if (std::gcd(t, n) == 1) {
                    Quandle q = affine(n, t);
                    o.require(!check_axioms(q.table(), n), q.name());
                  }
              }
              const Table base = dihedral(5).table();
              int rejected = 0;
              for (int cell = 0; cell < 25; ++cell)
                for (int v = 1; v <= 5; ++v) {
                  if (v == base[cell])
                    continue;
                  Table t = base;
                  t[cell] = v;
                  auto violation = check_axioms(t, 5);
                  o.require(violation && witness_holds(t, 5, *violation),
                            "mutation at cell " + std::to_string(cell));
                  rejected += violation ? 1 : 0;
                }
              o.require(rejected == 100, std::to_string(rejected) + " mutations rejected");
              return o;
            });

  criterion(2, "colourability facts: 3_1 by dihedral(3); 4_1 not by dihedral(3), by dihedral(5)",
            kLimitFacts, [] {
              Outcome o;
              struct Case {
                std::string diagram, braid;
                int n;
                bool expected;
              };
              for (const Case &c : {Case{"trefoil-gauss", "trefoil-braid", 3, true},
                                    Case{"4_1-dt", "figure-eight-braid", 3, false},
                                    Case{"4_1-dt", "figure-eight-braid", 5, true}}) {
                Quandle q = dihedral(c.n);
                const KnotDiagram &d = knot(c.diagram);
                const BraidWord &b = *fixtures::named(c.braid).braid;
                std::string tag = label(c.diagram, q);
                o.require(color_brute(d, q, Mode::decide).colorable() == c.expected, tag + " brute");
                o.require(color_backtrack(d, q, Mode::decide).colorable() == c.expected,
                          tag + " backtrack");
                o.require(color_braid(b, q, Mode::decide).colorable() == c.expected, tag + " braid");
                o.require(colorable(d, q) == c.expected, tag + " sat");
              }
              return o;
            });

  criterion(3, "counts: col(3_1, dihedral(3)) = 6, col(4_1, dihedral(5)) = 20 on every path",
            kLimitCounts, [] {
              Outcome o;
              struct Case {
                std::string diagram, braid;
                int n;
                uint64_t expected;
              };
              for (const Case &c : {Case{"trefoil-gauss", "trefoil-braid", 3, 6},
                                    Case{"4_1-dt", "figure-eight-braid", 5, 20}}) {
                Quandle q = dihedral(c.n);
                const KnotDiagram &d = knot(c.diagram);
                std::string tag = label(c.diagram, q);
                uint64_t ref = oracle::count_nontrivial(d, q.table(), q.size());
                o.require(ref == c.expected, tag + " oracle gave " + std::to_string(ref));
                o.require(color_brute(d, q, Mode::count).nontrivial == ref, tag + " brute");
                o.require(color_backtrack(d, q, Mode::count).nontrivial == ref, tag + " backtrack");
                o.require(color_braid(*fixtures::named(c.braid).braid, q, Mode::count).nontrivial == ref,
                          tag + " braid");
                o.require(color_backtrack(d, q, Mode::count, {}, true).nontrivial * q.size() == ref,
                          tag + " pinned x q");
                o.require(count_colorings(d, q) == ref, tag + " count_colorings");
              }
              return o;
            });

  criterion(4, "oracle equivalence: fixture knots <= 8 crossings x library quandles of size <= 6",
            kLimitMatrix, [&] {
              Outcome o;
              std::vector<Quandle> quandles;
              for (const auto &q : library)
                if (q.size() <= kMatrixMaxQuandle)
                  quandles.push_back(q);
              size_t knots = 0, cells = 0;
              for (const auto &k : fixtures::knots()) {
                if (k.diagram.crossing_count() > kMatrixMaxCrossings)
                  continue;
                ++knots;
                for (const auto &q : quandles) {
                  ++cells;
                  std::string tag = label(k.name, q);
                  uint64_t ref = oracle::count_nontrivial(k.diagram, q.table(), q.size());
                  bool yes = ref > 0;
                  o.require(color_brute(k.diagram, q, Mode::decide).colorable() == yes, tag + " brute");
                  o.require(color_backtrack(k.diagram, q, Mode::decide).colorable() == yes,
                            tag + " backtrack");
                  o.require(colorable(k.diagram, q) == yes, tag + " sat");
                  o.require(color_brute(k.diagram, q, Mode::count).nontrivial == ref, tag + " brute count");
                  o.require(color_backtrack(k.diagram, q, Mode::count).nontrivial == ref,
                            tag + " backtrack count");
                  o.require(count_colorings(k.diagram, q) == ref, tag + " count_colorings");
                  if (k.braid)
                    o.require(color_braid(*k.braid, q, Mode::count).nontrivial == ref, tag + " braid");
                }
              }
              o.require(knots >= kMatrixMinKnots, "only " + std::to_string(knots) + " knots");
              o.require(quandles.size() >= 5, "only " + std::to_string(quandles.size()) + " quandles");
              for (const char *must : {"unknot", "trefoil-gauss", "4_1-dt", "torus-2-5", "torus-2-7",
                                       "torus-3-4"})
                o.require(fixtures::named(must).diagram.crossing_count() <= kMatrixMaxCrossings,
                          std::string(must) + " missing from the matrix");
              if (o.ok)
                o.detail = std::to_string(knots) + " knots x " + std::to_string(quandles.size()) +
                           " quandles = " + std::to_string(cells) + " cells";
              return o;
            });

  criterion(5, "invariance: col_Q constant across presentations of 3_1 and 4_1, every library quandle",
            kLimitInvariance, [&] {
              Outcome o;
              for (const std::string family : {"3_1", "4_1"}) {
                auto presentations = fixtures::of_family(family);
                o.require(presentations.size() >= 4, family + " has fewer than 4 presentations");
                for (const auto &q : library) {
                  uint64_t first = count_colorings(presentations.front().diagram, q);
                  for (const auto &p : presentations)
                    o.require(count_colorings(p.diagram, q) == first, label(p.name, q));
                }
              }
              return o;
            });

  criterion(6, "Fox path: fox_count = col(dihedral(n)) for n in 2..9; Fox p-colourable iff p | det",
            kLimitFox, [] {
              Outcome o;
              for (const auto &k : fixtures::knots()) {
                for (int n = 2; n <= 9; ++n)
                  o.require(fox_count(k.diagram, n) == count_colorings(k.diagram, dihedral(n)),
                            k.name + " n=" + std::to_string(n));
                uint64_t det = knot_determinant(k.diagram);
                for (int p = 3; p <= 13; ++p)
                  if (is_odd_prime(p))
                    o.require(fox_colorable(k.diagram, p) == (det % p == 0),
                              k.name + " p=" + std::to_string(p));
              }
              return o;
            });

  criterion(7, "torus law: T(2,n), n in {3,5,7,9,11}, dihedral(p)-colourable iff p | n, p <= 11",
            kLimitTorus, [] {
              Outcome o;
              for (int n : {3, 5, 7, 9, 11}) {
                BraidWord b = torus_braid(2, n);
                KnotDiagram d = braid_to_diagram(b);
                for (int p = 3; p <= 11; ++p) {
                  if (!is_odd_prime(p))
                    continue;
                  bool expected = n % p == 0;
                  std::string tag = "T(2," + std::to_string(n) + ") / dihedral(" + std::to_string(p) + ")";
                  o.require(colorable(d, dihedral(p)) == expected, tag + " sat");
                  o.require(color_braid(b, dihedral(p), Mode::decide).colorable() == expected,
                            tag + " braid");
                }
              }
              return o;
            });

  criterion(8, "trivial Alexander polynomial: no affine colouring; prefilter keeps every verdict",
            kLimitPrefilter, [&] {
              Outcome o;
              int trivial = 0;
              for (const auto &k : fixtures::knots()) {
                if (alexander_trivial(k.diagram)) {
                  ++trivial;
                  for (const auto &q : library)
                    if (q.affine())
                      o.require(!colorable(k.diagram, q), label(k.name, q));
                }
                CertifyOptions pre;
                pre.prefilter = true;
                bool plain = certify_knotted(k.diagram, library).exhausted();
                bool filtered = certify_knotted(k.diagram, library, pre).exhausted();
                o.require(plain == filtered, k.name + " verdict changed by the prefilter");
              }
              o.require(trivial >= static_cast<int>(fixtures::of_family("0_1").size()),
                        "unknot presentations missing");
              return o;
            });

  criterion(9, "CNF fidelity: 9 vars / 43 clauses, golden DIMACS, every model verifies", kLimitCnf,
            [] {
              Outcome o;
              const KnotDiagram &t = knot("trefoil-gauss");
              CnfInstance cnf = encode_cnf(t, dihedral(3));
              o.require(cnf.num_vars == 9 && cnf.clauses.size() == 43, "wrong instance size");
              std::ifstream f(fixtures::data_dir() + "/trefoil_d3.cnf", std::ios::binary);
              std::stringstream golden;
              golden << f.rdbuf();
              std::string first = emit_dimacs(cnf);
              o.require(first == golden.str(), "DIMACS differs from the golden file");
              o.require(emit_dimacs(encode_cnf(t, dihedral(3))) == first, "DIMACS not reproducible");
              int models = 0;
              for (const auto &k : fixtures::knots())
                for (const auto &q : fixtures::small_quandles()) {
                  if (k.diagram.is_round_unknot())
                    continue;
                  CnfInstance inst = encode_cnf(k.diagram, q, {.symmetry_break = q.connected()});
                  SatResult r = sat_decide(inst);
                  if (!r.satisfiable)
                    continue;
                  ++models;
                  KnottednessCertificate cert{k.diagram, q, 0,
                                              decode_model(r.model, k.diagram.arc_count, q.size())};
                  o.require(verify_certificate(cert).ok, label(k.name, q));
                }
              o.require(models > 0, "no models produced");
              return o;
            });

  criterion(10, "simplicity: dihedral(3,5,7) simple; dihedral(9) factors onto dihedral(3)",
            kLimitSimple, [] {
              Outcome o;
              for (int p : {3, 5, 7})
                o.require(is_simple(dihedral(p)), "dihedral(" + std::to_string(p) + ")");
              Quandle d9 = dihedral(9);
              o.require(!is_simple(d9), "dihedral(9) reported simple");
              Congruence mod3;
              mod3.rep = {0, 1, 2, 3, 1, 2, 3, 1, 2, 3};
              o.require(is_congruence(d9, mod3), "mod-3 blocks are not a congruence");
              FactorQuandle f = factor(d9, mod3);
              o.require(find_isomorphism(f.quandle, dihedral(3)).has_value(), "factor is not dihedral(3)");
              int pushed = 0;
              for (const auto &k : fixtures::knots()) {
                auto w = color_backtrack(k.diagram, d9, Mode::decide).witness;
                if (!w)
                  continue;
                ++pushed;
                o.require(is_coloring(k.diagram, f.quandle, push_forward(*w, f.projection)), k.name);
              }
              o.require(pushed > 0, "no fixture knot is dihedral(9)-colourable");
              return o;
            });

  criterion(11, "soundness: no certificate for any unknot presentation against the full library",
            kLimitSoundness, [&] {
              Outcome o;
              for (const auto &k : fixtures::of_family("0_1")) {
                CertifyResult r = certify_knotted(k.diagram, library);
                o.require(r.exhausted(), k.name + " was certified");
                o.require(!r.budget_hit(), k.name + " hit the budget");
                o.require(r.trace.size() == library.size(), k.name + " scan incomplete");
              }
              o.require(fixtures::of_family("0_1").size() >= 5, "too few unknot presentations");
              return o;
            });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
