#include "fixtures.hpp"

#include <stdexcept>

#include "knotcolor/library.hpp"

namespace fixtures {

using namespace knotcolor;

std::string data_dir() { return KNOTCOLOR_TEST_DATA_DIR; }

namespace {

Knot from_gauss(std::string name, std::string family, const std::string &code) {
  KnotDiagram d = parse_gauss(code);
  d.name = name;
  return {std::move(name), std::move(family), std::move(d), std::nullopt};
}

Knot from_braid(std::string name, std::string family, const BraidWord &b) {
  KnotDiagram d = braid_to_diagram(b);
  d.name = name;
  return {std::move(name), std::move(family), std::move(d), b};
}

Knot from_braid(std::string name, std::string family, const std::string &text) {
  return from_braid(std::move(name), std::move(family), parse_braid(text));
}

std::vector<Knot> build() {
  std::vector<Knot> out;
  out.push_back(from_gauss("unknot", "0_1", "UNKNOT"));
  out.push_back(from_gauss("unknot-kink+", "0_1", "O1+ U1+"));
  out.push_back(from_gauss("unknot-kink-", "0_1", "O1- U1-"));
  out.push_back(from_gauss("unknot-r2", "0_1", "O1+ O2- U1+ U2-"));
  out.push_back(from_braid("unknot-braid-2", "0_1", "2: 1"));
  out.push_back(from_braid("unknot-braid-2-", "0_1", "2: -1"));
  out.push_back(from_braid("unknot-braid-3", "0_1", "3: 1 2"));
  out.push_back(from_braid("unknot-braid-3-mixed", "0_1", "3: 1 -2"));
  out.push_back(from_braid("unknot-braid-cancel", "0_1", "3: 1 2 -1 1"));

  const BraidWord trefoil = torus_braid(2, 3);
  out.push_back(from_gauss("trefoil-gauss", "3_1", "O1+ U2+ O3+ U1+ O2+ U3+"));
  out.push_back(from_braid("trefoil-braid", "3_1", trefoil));
  out.push_back(from_braid("trefoil-r2", "3_1", insert_r2(trefoil, 1, 0)));
  out.push_back(from_braid("trefoil-markov", "3_1", markov_stabilize(trefoil)));
  out.push_back(from_braid("trefoil-markov-r2", "3_1", insert_r2(markov_stabilize(trefoil), 2, 1)));

  const BraidWord eight = parse_braid("3: 1 -2 1 -2");
  out.push_back(from_braid("figure-eight-braid", "4_1", eight));
  out.push_back(from_braid("figure-eight-rotated", "4_1", rotate_braid(eight, 1)));
  out.push_back(from_braid("figure-eight-r2", "4_1", insert_r2(eight, 2, 2)));
  out.push_back(from_braid("figure-eight-markov", "4_1", markov_stabilize(eight)));

  out.push_back(from_braid("torus-2-5", "5_1", torus_braid(2, 5)));
  out.push_back(from_braid("5_2-braid", "5_2", "3: 1 1 1 2 -1 2"));
  out.push_back(from_braid("torus-2-7", "7_1", torus_braid(2, 7)));
  out.push_back(from_braid("torus-3-4", "8_19", torus_braid(3, 4)));

  FixtureLoad csv = load_dt_fixtures(data_dir() + "/knots.csv");
  for (auto &row : csv.knots) {
    row.diagram.name = row.name + "-dt";
    out.push_back({row.name + "-dt", row.name, std::move(row.diagram), std::nullopt});
  }
  return out;
}

} // namespace

const std::vector<Knot> &knots() {
  static const std::vector<Knot> all = build();
  return all;
}

std::vector<Knot> of_family(const std::string &family) {
  std::vector<Knot> out;
  for (const auto &k : knots())
    if (k.family == family)
      out.push_back(k);
  return out;
}

const Knot &named(const std::string &name) {
  for (const auto &k : knots())
    if (k.name == name)
      return k;
  throw std::out_of_range("no fixture named " + name);
}

const std::vector<Quandle> &small_quandles() {
  static const std::vector<Quandle> lib = [] {
    std::vector<Quandle> out;
    for (auto &q : library_generate(kDefaultLibrarySpec))
      if (q.size() <= 6)
        out.push_back(q);
    return out;
  }();
  return lib;
}

} // namespace fixtures
