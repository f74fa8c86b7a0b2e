#include "knotcolor/recognize.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

namespace knotcolor {

const char *to_string(ScanStatus s) {
  switch (s) {
  case ScanStatus::uncolorable:
    return "uncolorable";
  case ScanStatus::colorable:
    return "colorable";
  case ScanStatus::budget_exceeded:
    return "budget_exceeded";
  }
  return "?";
}

bool CertifyResult::budget_hit() const {
  return std::any_of(trace.begin(), trace.end(),
                     [](const auto &o) { return o.status == ScanStatus::budget_exceeded; });
}

std::vector<Quandle> affine_prefilter(const KnotDiagram &knot, const std::vector<Quandle> &library) {
  if (!alexander_trivial(knot))
    return library;
  std::vector<Quandle> out;
  std::copy_if(library.begin(), library.end(), std::back_inserter(out),
               [](const Quandle &q) { return !q.affine(); });
  return out;
}

namespace {

struct Scan {
  QuandleOutcome outcome;
  std::optional<Coloring> coloring;
};

Scan scan_one(const KnotDiagram &knot, const Quandle &q, int index, const SearchLimits &limits) {
  Scan s;
  s.outcome.index = index;
  s.outcome.quandle = q.name();
  try {
    s.coloring = find_coloring(knot, q, limits);
    s.outcome.status = s.coloring ? ScanStatus::colorable : ScanStatus::uncolorable;
  } catch (const BudgetExceeded &e) {
    s.outcome.status = ScanStatus::budget_exceeded;
    s.outcome.detail = e.what();
  }
  return s;
}

} // namespace

CertifyResult certify_knotted(const KnotDiagram &knot, const std::vector<Quandle> &library,
                              const CertifyOptions &options) {
  if (library.empty())
    throw std::invalid_argument("certify_knotted needs a nonempty library");
  CertifyResult result;

  std::vector<int> candidates;
  bool drop_affine = options.prefilter && alexander_trivial(knot);
  for (int i = 0; i < static_cast<int>(library.size()); ++i) {
    if (drop_affine && library[i].affine()) {
      ++result.removed_by_prefilter;
      continue;
    }
    candidates.push_back(i);
  }

  std::vector<Scan> scans(candidates.size());
  std::vector<char> done(candidates.size(), 0);
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (size_t c = 0; c < candidates.size(); ++c) {
      scans[c] = scan_one(knot, library[candidates[c]], candidates[c], options.limits);
      done[c] = 1;
      if (scans[c].coloring)
        break;
    }
  } else {
    // Workers race; the lowest successful position wins so the result matches
    // the sequential scan.
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{candidates.size()};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t c; (c = next.fetch_add(1)) < candidates.size();) {
          if (c > best.load())
            break;
          scans[c] = scan_one(knot, library[candidates[c]], candidates[c], options.limits);
          done[c] = 1;
          if (scans[c].coloring) {
            size_t cur = best.load();
            while (c < cur && !best.compare_exchange_weak(cur, c)) {
            }
          }
        }
      });
    for (auto &t : pool)
      t.join();
  }

  for (size_t c = 0; c < candidates.size(); ++c) {
    if (!done[c])
      break;
    result.trace.push_back(scans[c].outcome);
    if (scans[c].coloring) {
      KnottednessCertificate cert{knot, library[candidates[c]], candidates[c], *scans[c].coloring};
      auto check = verify_certificate(cert);
      if (!check.ok)
        throw std::logic_error("engine produced an invalid certificate: " + check.reason);
      result.certificate = std::move(cert);
      break;
    }
  }
  return result;
}

DistinguishResult distinguish(const KnotDiagram &first, const KnotDiagram &second,
                              const std::vector<Quandle> &library,
                              const DistinguishOptions &options) {
  DistinguishResult result;
  if (options.use_alexander) {
    result.alexander_first = alexander_polynomial(first);
    result.alexander_second = alexander_polynomial(second);
    if (result.alexander_first != result.alexander_second) {
      result.witness = AlexanderMismatch{result.alexander_first, result.alexander_second};
      return result;
    }
  }
  for (int i = 0; i < static_cast<int>(library.size()); ++i) {
    const Quandle &q = library[i];
    QuandleComparison cmp;
    cmp.index = i;
    cmp.quandle = q.name();
    try {
      cmp.colorable_first = colorable(first, q, options.limits);
      cmp.colorable_second = colorable(second, q, options.limits);
    } catch (const BudgetExceeded &) {
      cmp.budget_exceeded = true;
      result.coverage.push_back(cmp);
      continue;
    }
    bool need_counts = cmp.colorable_first != cmp.colorable_second || options.count;
    if (need_counts) {
      try {
        cmp.count_first = cmp.colorable_first ? count_colorings(first, q, options.limits) : 0;
        cmp.count_second = cmp.colorable_second ? count_colorings(second, q, options.limits) : 0;
      } catch (const BudgetExceeded &) {
        cmp.budget_exceeded = true;
      }
    }
    result.coverage.push_back(cmp);
    bool counts_differ = cmp.count_first && cmp.count_second && *cmp.count_first != *cmp.count_second;
    if (cmp.colorable_first != cmp.colorable_second || counts_differ) {
      result.witness = ColorCountMismatch{i, q.name(), cmp.colorable_first, cmp.colorable_second,
                                          cmp.count_first, cmp.count_second};
      return result;
    }
  }
  return result;
}

CertificateCheck verify_certificate(const KnottednessCertificate &cert) {
  CertificateCheck out;
  const Table &table = cert.quandle.table();
  const int q = cert.quandle.size();
  if (auto v = check_axioms(table, q)) {
    out.reason = "quandle fails axioms: " + describe(*v);
    return out;
  }
  const KnotDiagram &k = cert.knot;
  const auto &colors = cert.coloring.colors;
  if (static_cast<int>(colors.size()) != k.arc_count) {
    out.reason = "colouring has " + std::to_string(colors.size()) + " entries for " +
                 std::to_string(k.arc_count) + " arcs";
    return out;
  }
  for (int c : colors)
    if (c < 1 || c > q) {
      out.reason = "colour " + std::to_string(c) + " outside the quandle";
      return out;
    }
  auto star = [&](int a, int b) { return table[(a - 1) * q + (b - 1)]; };
  for (size_t i = 0; i < k.crossings.size(); ++i) {
    const Crossing &x = k.crossings[i];
    int over = colors[x.over - 1], in = colors[x.under_in - 1], out_c = colors[x.under_out - 1];
    bool holds = x.sign > 0 ? out_c == star(over, in) : in == star(over, out_c);
    if (!holds) {
      out.crossing = static_cast<int>(i) + 1;
      out.reason = "crossing " + std::to_string(out.crossing) + " violates the colouring rule";
      return out;
    }
  }
  if (std::set<int>(colors.begin(), colors.end()).size() < 2) {
    out.reason = "colouring is trivial (one colour)";
    return out;
  }
  out.ok = true;
  return out;
}

std::string certificate_to_json(const KnottednessCertificate &cert) {
  using nlohmann::json;
  json crossings = json::array();
  for (const auto &c : cert.knot.crossings)
    crossings.push_back({{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out},
                         {"sign", c.sign}});
  json table = json::array();
  for (int a = 1; a <= cert.quandle.size(); ++a) {
    json row = json::array();
    for (int b = 1; b <= cert.quandle.size(); ++b)
      row.push_back(cert.quandle.op(a, b));
    table.push_back(row);
  }
  json coloring = json::object();
  for (size_t i = 0; i < cert.coloring.colors.size(); ++i)
    coloring[std::to_string(i + 1)] = cert.coloring.colors[i];
  json j = {
      {"schema", "knotcolor-certificate/1"},
      {"convention", kConventionTag},
      {"knot", {{"name", cert.knot.name}, {"arc_count", cert.knot.arc_count}, {"crossings", crossings}}},
      {"quandle",
       {{"name", cert.quandle.name()},
        {"size", cert.quandle.size()},
        {"library_index", cert.library_index},
        {"table", table}}},
      {"coloring", coloring},
  };
  return j.dump(2);
}

KnottednessCertificate certificate_from_json(const std::string &text) {
  using nlohmann::json;
  try {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "knotcolor-certificate/1")
      throw std::invalid_argument("unsupported certificate schema");
    if (j.at("convention").get<std::string>() != kConventionTag)
      throw std::invalid_argument("unsupported sign convention");
    KnotDiagram k;
    k.name = j.at("knot").value("name", "");
    k.arc_count = j.at("knot").at("arc_count").get<int>();
    for (const auto &c : j.at("knot").at("crossings"))
      k.crossings.push_back({c.at("over").get<int>(), c.at("under_in").get<int>(),
                             c.at("under_out").get<int>(), c.at("sign").get<int>()});
    validate(k);
    const auto &jq = j.at("quandle");
    int size = jq.at("size").get<int>();
    Table table;
    for (const auto &row : jq.at("table"))
      for (const auto &v : row)
        table.push_back(v.get<int>());
    Quandle q = verify_axioms(table, size, jq.value("name", ""));
    Coloring f;
    f.colors.assign(k.arc_count, 0);
    for (auto it = j.at("coloring").begin(); it != j.at("coloring").end(); ++it) {
      int arc = std::stoi(it.key());
      if (arc < 1 || arc > k.arc_count)
        throw std::invalid_argument("coloring names arc " + it.key() + " outside the diagram");
      f.colors[arc - 1] = it.value().get<int>();
    }
    return {std::move(k), std::move(q), jq.value("library_index", -1), std::move(f)};
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  } catch (const AxiomError &e) {
    throw std::invalid_argument(std::string("certificate quandle: ") + e.what());
  } catch (const std::logic_error &e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace knotcolor
