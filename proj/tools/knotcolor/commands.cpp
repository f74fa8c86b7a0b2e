#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "knotcolor/alexander.hpp"
#include "knotcolor/cnf.hpp"
#include "knotcolor/coloring.hpp"
#include "knotcolor/recognize.hpp"

namespace cli {

using namespace knotcolor;
using json = nlohmann::ordered_json;

namespace {

constexpr const char *kSchema = "knotcolor/1";

class Stopwatch {
public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct EngineRun {
  bool colorable = false;
  std::optional<uint64_t> count;
  std::optional<Coloring> witness;
  uint64_t work = 0;
};

std::string solver_path(const std::string &solver) {
  const std::string prefix = "external:";
  return solver.rfind(prefix, 0) == 0 ? solver.substr(prefix.size()) : solver;
}

EngineRun run_engine(const std::string &engine, const KnotInput &k, const Quandle &q, Mode mode,
                     const SearchLimits &limits, const std::string &solver) {
  EngineRun run;
  auto take = [&](const EngineResult &r) {
    run.colorable = r.colorable();
    run.witness = r.witness;
    run.work = r.work;
    if (mode == Mode::count)
      run.count = r.nontrivial;
  };
  if (engine == "brute") {
    take(color_brute(k.diagram, q, mode, limits));
  } else if (engine == "backtrack") {
    if (mode == Mode::count) {
      run.count = count_colorings(k.diagram, q, limits);
      run.colorable = *run.count > 0;
    } else {
      take(color_backtrack(k.diagram, q, mode, limits));
    }
  } else if (engine == "braid") {
    if (!k.braid)
      throw UsageError("engine braid needs a braid input (--braid or --torus)");
    take(color_braid(*k.braid, q, mode, limits));
  } else if (engine == "sat" || engine == "external") {
    if (mode == Mode::count)
      throw UsageError("counting uses brute, backtrack or braid; SAT engines only decide");
    if (engine == "sat") {
      run.witness = find_coloring(k.diagram, q, limits);
    } else {
      if (solver.empty())
        throw UsageError("engine external needs --solver external:<path>");
      if (!k.diagram.is_round_unknot() && q.size() >= 2) {
        CnfInstance cnf = encode_cnf(k.diagram, q, {.symmetry_break = q.connected()});
        SatResult r = solve_external(cnf, solver_path(solver));
        if (r.satisfiable)
          run.witness = decode_model(r.model, k.diagram.arc_count, q.size());
      }
    }
    run.colorable = run.witness.has_value();
  } else {
    throw UsageError("unknown engine '" + engine + "'");
  }
  if (run.witness && (!is_coloring(k.diagram, q, *run.witness) || !is_nontrivial(*run.witness)))
    throw std::logic_error("engine " + engine + " returned an invalid colouring");
  return run;
}

// Brute force alongside the chosen engine when q^arcs fits the budget.
std::string cross_check(const EngineRun &run, const KnotInput &k, const Quandle &q, Mode mode,
                        const SearchLimits &limits) {
  uint64_t total = 1;
  for (int i = 0; i < k.diagram.arc_count && total <= limits.max_assignments; ++i)
    total *= static_cast<uint64_t>(q.size());
  if (limits.max_assignments != 0 && total > limits.max_assignments)
    return "skipped";
  EngineResult ref = color_brute(k.diagram, q, mode, limits);
  if (ref.colorable() != run.colorable || (run.count && *run.count != ref.nontrivial))
    throw std::logic_error("engine disagrees with brute force (brute force: " +
                           std::to_string(ref.nontrivial) + ")");
  return "agree";
}

json knot_json(const KnotDiagram &d) {
  return {{"name", d.name}, {"crossings", d.crossing_count()}, {"arcs", d.arc_count}};
}

json budget_json(const SearchLimits &l, const std::string &status, const std::string &detail) {
  json j = {{"status", status},
            {"max_seconds", l.max_seconds},
            {"max_nodes", l.max_nodes},
            {"max_assignments", l.max_assignments}};
  if (!detail.empty())
    j["detail"] = detail;
  return j;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string join_colors(const Coloring &c) {
  std::string out;
  for (int v : c.colors)
    out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

int run_color(const ColorOptions &o, Mode mode) {
  const char *command = mode == Mode::count ? "count" : "color";
  KnotInput k = knot_from_flags(o.knot);
  if (o.quandle.empty())
    throw UsageError("--quandle is required");
  Quandle q = quandle_from_spec(o.quandle);
  std::string engine = o.engine;
  if (engine.empty())
    engine = !o.solver.empty() ? "external" : mode == Mode::count ? "backtrack" : "sat";
  SearchLimits limits = limits_of(o.budget);

  Stopwatch clock;
  std::optional<EngineRun> run;
  std::string budget_detail, check = "off";
  try {
    run = run_engine(engine, k, q, mode, limits, o.solver);
    if (o.check)
      check = cross_check(*run, k, q, mode, limits);
  } catch (const BudgetExceeded &e) {
    budget_detail = e.what();
  }
  double millis = clock.millis();

  if (o.json) {
    json j = {{"schema", kSchema},
              {"command", command},
              {"knot", knot_json(k.diagram)},
              {"quandle", {{"name", q.name()}, {"size", q.size()}}},
              {"engine", engine},
              {"elapsed_ms", millis},
              {"check", check},
              {"budget", budget_json(limits, run ? "ok" : "exceeded", budget_detail)}};
    j["colorable"] = run ? json(run->colorable) : json(nullptr);
    j["coloring"] = run && run->witness ? json(run->witness->colors) : json(nullptr);
    if (mode == Mode::count)
      j["count"] = run ? json(*run->count) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (run) {
    if (mode == Mode::count)
      std::cout << *run->count << "\n";
    else {
      std::cout << "colorable=" << (run->colorable ? "true" : "false") << "\n";
      if (run->witness)
        std::cout << "coloring: " << join_colors(*run->witness) << "\n";
    }
  }
  if (!run) {
    std::cerr << "knotcolor: budget exceeded: " << budget_detail << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

json certificate_object(const KnottednessCertificate &c) {
  return json::parse(certificate_to_json(c));
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int cmd_color(const ColorOptions &o) { return run_color(o, Mode::decide); }
int cmd_count(const ColorOptions &o) { return run_color(o, Mode::count); }

int cmd_encode(const EncodeOptions &o) {
  KnotInput k = knot_from_flags(o.knot);
  if (o.quandle.empty())
    throw UsageError("--quandle is required");
  Quandle q = quandle_from_spec(o.quandle);
  std::string text = emit_dimacs(encode_cnf(
      k.diagram, q, {.symmetry_break = !o.no_sb, .nontrivial = !o.no_nontrivial}));
  if (o.output.empty() || o.output == "-")
    std::cout << text;
  else
    write_file(o.output, text);
  return kExitOk;
}

int cmd_certify(const CertifyOptions &o) {
  KnotInput k = knot_from_flags(o.knot);
  auto library = resolve_library(o.library);
  if (library.empty())
    throw UsageError("the quandle library is empty");
  knotcolor::CertifyOptions opts;
  opts.limits = limits_of(o.budget);
  opts.prefilter = o.prefilter;
  opts.jobs = o.jobs;
  Stopwatch clock;
  CertifyResult r = certify_knotted(k.diagram, library, opts);
  double millis = clock.millis();

  if (r.certificate && !o.output.empty())
    write_file(o.output, certificate_to_json(*r.certificate) + "\n");
  if (o.json) {
    json trace = json::array();
    for (const auto &t : r.trace) {
      json row = {{"index", t.index}, {"quandle", t.quandle}, {"status", to_string(t.status)}};
      if (!t.detail.empty())
        row["detail"] = t.detail;
      trace.push_back(row);
    }
    json j = {{"schema", kSchema},
              {"command", "certify"},
              {"knot", knot_json(k.diagram)},
              {"verdict", r.certificate ? "certificate" : "exhausted"},
              {"library_size", library.size()},
              {"removed_by_prefilter", r.removed_by_prefilter},
              {"budget_hit", r.budget_hit()},
              {"elapsed_ms", millis},
              {"trace", trace}};
    j["certificate"] = r.certificate ? certificate_object(*r.certificate) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (r.certificate) {
    const auto &c = *r.certificate;
    std::cout << "certificate: quandle " << c.quandle.name() << " (size " << c.quandle.size()
              << ", library index " << c.library_index << ")\n"
              << "coloring: " << join_colors(c.coloring) << "\n";
  } else {
    std::cout << "exhausted: no nontrivial colouring in " << r.trace.size() << " of "
              << library.size() << " quandles";
    if (r.removed_by_prefilter > 0)
      std::cout << " (" << r.removed_by_prefilter << " removed by the Alexander prefilter)";
    if (r.budget_hit())
      std::cout << "; some searches hit the budget";
    std::cout << "\nthis does not show the knot is trivial\n";
  }
  return r.certificate ? kExitOk : kExitNegative;
}

int cmd_distinguish(const DistinguishOptions &o) {
  KnotInput a = knot_from_spec(o.first), b = knot_from_spec(o.second);
  auto library = resolve_library(o.library);
  knotcolor::DistinguishOptions opts;
  opts.limits = limits_of(o.budget);
  opts.count = o.count;
  opts.use_alexander = !o.no_alexander;
  DistinguishResult r = distinguish(a.diagram, b.diagram, library, opts);

  json witness = nullptr;
  std::string text;
  if (r.witness) {
    if (auto *m = std::get_if<AlexanderMismatch>(&*r.witness)) {
      witness = {{"kind", "alexander"},
                 {"first", m->first.to_string()},
                 {"second", m->second.to_string()}};
      text = "distinguished by the Alexander polynomial: " + m->first.to_string() + " vs " +
             m->second.to_string();
    } else {
      const auto &c = std::get<ColorCountMismatch>(*r.witness);
      witness = {{"kind", "coloring"},
                 {"library_index", c.library_index},
                 {"quandle", c.quandle},
                 {"colorable_first", c.colorable_first},
                 {"colorable_second", c.colorable_second}};
      witness["count_first"] = c.count_first ? json(*c.count_first) : json(nullptr);
      witness["count_second"] = c.count_second ? json(*c.count_second) : json(nullptr);
      text = "distinguished by quandle " + c.quandle + ": ";
      if (c.count_first && c.count_second)
        text += std::to_string(*c.count_first) + " vs " + std::to_string(*c.count_second) +
                " nontrivial colourings";
      else
        text += std::string(c.colorable_first ? "colourable" : "not colourable") + " vs " +
                (c.colorable_second ? "colourable" : "not colourable");
    }
  } else {
    text = "indistinguishable by this library (" + std::to_string(r.coverage.size()) +
           " quandles compared)";
  }

  if (o.json) {
    json coverage = json::array();
    for (const auto &c : r.coverage) {
      json row = {{"index", c.index},
                  {"quandle", c.quandle},
                  {"colorable_first", c.colorable_first},
                  {"colorable_second", c.colorable_second},
                  {"budget_exceeded", c.budget_exceeded}};
      row["count_first"] = c.count_first ? json(*c.count_first) : json(nullptr);
      row["count_second"] = c.count_second ? json(*c.count_second) : json(nullptr);
      coverage.push_back(row);
    }
    json j = {{"schema", kSchema},
              {"command", "distinguish"},
              {"first", knot_json(a.diagram)},
              {"second", knot_json(b.diagram)},
              {"verdict", r.witness ? "distinguished" : "indistinguishable"},
              {"witness", witness},
              {"coverage", coverage}};
    if (opts.use_alexander)
      j["alexander"] = {{"first", r.alexander_first.to_string()},
                        {"second", r.alexander_second.to_string()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return r.witness ? kExitOk : kExitNegative;
}

int cmd_bench(const BenchOptions &o) {
  auto family = family_from_spec(o.family);
  std::vector<Quandle> quandles =
      o.quandles ? quandle_list(*o.quandles) : resolve_library(o.library);
  if (quandles.empty())
    throw UsageError("the quandle library is empty");
  if (o.engine != "brute" && o.engine != "backtrack" && o.engine != "braid" &&
      o.engine != "sat" && o.engine != "external")
    throw UsageError("unknown engine '" + o.engine + "'");
  if (o.engine == "external" && o.solver.empty())
    throw UsageError("engine external needs --solver external:<path>");
  if (o.engine == "braid")
    for (const auto &m : family)
      if (!m.knot.braid)
        throw UsageError("engine braid needs braid presentations; " + m.name + " has none");
  SearchLimits limits = limits_of(o.budget);

  struct Row {
    std::string verdict = "unknown", status = "ok";
    double millis = 0;
  };
  const size_t count = family.size() * quandles.size();
  std::vector<Row> rows(count);
  auto work = [&](size_t i) {
    const auto &member = family[i / quandles.size()];
    const Quandle &q = quandles[i % quandles.size()];
    Row &row = rows[i];
    Stopwatch clock;
    try {
      EngineRun r = run_engine(o.engine, member.knot, q, Mode::decide, limits, o.solver);
      row.verdict = r.colorable ? "colorable" : "uncolorable";
    } catch (const BudgetExceeded &) {
      row.status = "budget_exceeded";
    } catch (const std::exception &) {
      row.status = "error";
    }
    row.millis = clock.millis();
  };

  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(1, o.jobs); ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;)
        work(i);
    });
  for (auto &t : pool)
    t.join();

  std::ostringstream csv;
  csv << "knot,quandle,size,engine,verdict,millis,status\n";
  for (size_t i = 0; i < count; ++i) {
    const Quandle &q = quandles[i % quandles.size()];
    csv << csv_field(family[i / quandles.size()].name) << ',' << csv_field(q.name()) << ','
        << q.size() << ',' << o.engine << ',' << rows[i].verdict << ',' << std::fixed << std::setprecision(3)
        << rows[i].millis << ',' << rows[i].status << '\n';
  }
  if (o.output.empty() || o.output == "-")
    std::cout << csv.str();
  else
    write_file(o.output, csv.str());
  return kExitOk;
}

int cmd_solve(const std::string &path) {
  CnfInstance cnf = parse_dimacs(read_file(path));
  SatResult r = sat_decide(cnf);
  std::cout << "c decisions " << r.decisions << " conflicts " << r.conflicts << "\n";
  if (!r.satisfiable) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s SATISFIABLE\nv";
  for (int v = 1; v <= cnf.num_vars; ++v)
    std::cout << ' ' << (r.model[v] ? v : -v);
  std::cout << " 0\n";
  return 10;
}

int cmd_verify(const std::string &path, bool as_json) {
  KnottednessCertificate cert = certificate_from_json(read_file(path));
  CertificateCheck check = verify_certificate(cert);
  if (as_json) {
    json j = {{"schema", kSchema}, {"command", "verify"}, {"valid", check.ok}};
    if (!check.ok) {
      j["reason"] = check.reason;
      j["crossing"] = check.crossing;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (check.ok ? "valid" : "invalid: " + check.reason) << "\n";
  }
  return check.ok ? kExitOk : kExitNegative;
}

} // namespace cli
