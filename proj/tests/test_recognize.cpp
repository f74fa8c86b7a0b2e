#include <doctest.h>

#include "knotcolor/library.hpp"
#include "knotcolor/recognize.hpp"
#include "support/fixtures.hpp"

using namespace knotcolor;

namespace {

const KnotDiagram &knot(const std::string &name) { return fixtures::named(name).diagram; }

} // namespace

TEST_CASE("certify the trefoil with a tricolouring") {
  CertifyResult r = certify_knotted(knot("trefoil-gauss"), {dihedral(3)});
  REQUIRE(r.certificate);
  CHECK(r.certificate->quandle == dihedral(3));
  CHECK(r.certificate->library_index == 0);
  CHECK(verify_certificate(*r.certificate).ok);
  CHECK(r.trace.size() == 1);
  CHECK(r.trace[0].status == ScanStatus::colorable);
}

TEST_CASE("figure-eight needs dihedral(5)") {
  CertifyResult d3 = certify_knotted(knot("4_1-dt"), {dihedral(3)});
  CHECK(d3.exhausted());
  REQUIRE(d3.trace.size() == 1);
  CHECK(d3.trace[0].status == ScanStatus::uncolorable);
  CertifyResult lib = certify_knotted(knot("4_1-dt"), library_generate("dihedral:7"));
  REQUIRE(lib.certificate);
  CHECK(lib.certificate->quandle.name() == "dihedral:5");
  CHECK(lib.certificate->library_index == 1);
  CHECK(lib.trace.size() == 2);
}

TEST_CASE("certify_knotted argument and budget handling") {
  CHECK_THROWS_AS(certify_knotted(knot("trefoil-gauss"), {}), std::invalid_argument);
  CertifyOptions opts;
  opts.limits.max_nodes = 1;
  CertifyResult r = certify_knotted(knot("torus-3-4"), library_generate("affine:7"), opts);
  CHECK(r.exhausted());
  CHECK(r.budget_hit());
  CHECK(std::string(to_string(ScanStatus::budget_exceeded)) == "budget_exceeded");
}

TEST_CASE("the certificate quandle is the first colourable one in library order") {
  auto lib = library_generate(kDefaultLibrarySpec);
  for (const auto &k : fixtures::knots()) {
    CertifyResult r = certify_knotted(k.diagram, lib);
    int first = -1;
    for (int i = 0; i < static_cast<int>(lib.size()) && first < 0; ++i)
      if (colorable(k.diagram, lib[i]))
        first = i;
    CAPTURE(k.name);
    if (first < 0) {
      CHECK(r.exhausted());
      CHECK(r.trace.size() == lib.size());
    } else {
      REQUIRE(r.certificate);
      CHECK(r.certificate->library_index == first);
      CHECK(verify_certificate(*r.certificate).ok);
    }
  }
}

TEST_CASE("parallel certification matches the sequential scan") {
  auto lib = library_generate(kDefaultLibrarySpec);
  for (const auto &k : fixtures::knots()) {
    CertifyOptions par;
    par.jobs = 4;
    CertifyResult a = certify_knotted(k.diagram, lib);
    CertifyResult b = certify_knotted(k.diagram, lib, par);
    CAPTURE(k.name);
    CHECK(a.exhausted() == b.exhausted());
    CHECK(a.trace.size() == b.trace.size());
    if (a.certificate && b.certificate) {
      CHECK(a.certificate->library_index == b.certificate->library_index);
      CHECK(a.certificate->coloring == b.certificate->coloring);
    }
  }
}

TEST_CASE("unknot presentations are never certified") {
  auto lib = library_generate(kDefaultLibrarySpec);
  for (const auto &k : fixtures::of_family("0_1")) {
    CAPTURE(k.name);
    CertifyResult r = certify_knotted(k.diagram, lib);
    CHECK(r.exhausted());
    CHECK(!r.budget_hit());
    for (const auto &o : r.trace)
      CHECK(o.status == ScanStatus::uncolorable);
  }
}

TEST_CASE("affine prefilter") {
  auto dihedrals = library_generate("dihedral:13");
  CHECK(affine_prefilter(knot("unknot"), dihedrals).empty());
  CHECK(affine_prefilter(knot("trefoil-gauss"), dihedrals).size() == dihedrals.size());

  auto lib = library_generate(kDefaultLibrarySpec);
  for (const auto &k : fixtures::knots()) {
    CertifyOptions pre;
    pre.prefilter = true;
    CertifyResult plain = certify_knotted(k.diagram, lib);
    CertifyResult filtered = certify_knotted(k.diagram, lib, pre);
    CAPTURE(k.name);
    CHECK(plain.exhausted() == filtered.exhausted());
    if (alexander_trivial(k.diagram)) {
      CHECK(filtered.removed_by_prefilter > 0);
      for (const auto &q : lib)
        if (q.affine())
          CHECK(!colorable(k.diagram, q));
    } else {
      CHECK(filtered.removed_by_prefilter == 0);
    }
  }
}

TEST_CASE("distinguish by Alexander polynomial") {
  auto lib = library_generate("dihedral:7");
  DistinguishResult r = distinguish(knot("trefoil-gauss"), knot("4_1-dt"), lib);
  REQUIRE(r.witness);
  REQUIRE(std::holds_alternative<AlexanderMismatch>(*r.witness));
  auto m = std::get<AlexanderMismatch>(*r.witness);
  CHECK(m.first == IntPolynomial({1, -1, 1}));
  CHECK(m.second == IntPolynomial({1, -3, 1}));
  DistinguishResult u = distinguish(knot("trefoil-gauss"), knot("unknot"), lib);
  REQUIRE(u.witness);
  CHECK(std::get<AlexanderMismatch>(*u.witness).second == IntPolynomial::constant(1));
}

TEST_CASE("distinguish by colourings") {
  DistinguishOptions no_alex;
  no_alex.use_alexander = false;
  DistinguishResult none = distinguish(knot("4_1-dt"), knot("unknot"), {dihedral(3)}, no_alex);
  CHECK(!none.distinguished());
  CHECK(none.coverage.size() == 1);

  DistinguishResult r =
      distinguish(knot("4_1-dt"), knot("unknot"), {dihedral(3), dihedral(5)}, no_alex);
  REQUIRE(r.witness);
  auto w = std::get<ColorCountMismatch>(*r.witness);
  CHECK(w.quandle == "dihedral:5");
  CHECK(w.library_index == 1);
  CHECK(w.colorable_first);
  CHECK(!w.colorable_second);
  CHECK(w.count_first == 20u);
  CHECK(w.count_second == 0u);
}

TEST_CASE("a knot is indistinguishable from itself") {
  auto lib = library_generate("dihedral:7,affine:7");
  DistinguishOptions opts;
  opts.count = true;
  DistinguishResult r = distinguish(knot("5_2-dt"), knot("5_2-dt"), lib, opts);
  CHECK(!r.distinguished());
  CHECK(r.coverage.size() == lib.size());
  for (const auto &c : r.coverage) {
    CHECK(c.count_first == c.count_second);
    CHECK(c.colorable_first == c.colorable_second);
  }
}

TEST_CASE("distinction witnesses can be recomputed") {
  auto lib = library_generate("dihedral:13,affine:7,conj:S4");
  DistinguishOptions opts;
  opts.use_alexander = false;
  opts.count = true;
  const auto &all = fixtures::knots();
  for (size_t i = 0; i < all.size(); i += 3)
    for (size_t j = i + 1; j < all.size(); j += 5) {
      DistinguishResult r = distinguish(all[i].diagram, all[j].diagram, lib, opts);
      if (!r.witness)
        continue;
      auto w = std::get<ColorCountMismatch>(*r.witness);
      const Quandle &q = lib[w.library_index];
      CHECK(colorable(all[i].diagram, q) == w.colorable_first);
      CHECK(colorable(all[j].diagram, q) == w.colorable_second);
      if (w.count_first && w.count_second) {
        CHECK(count_colorings(all[i].diagram, q) == *w.count_first);
        CHECK(count_colorings(all[j].diagram, q) == *w.count_second);
      }
      if (all[i].family == all[j].family)
        FAIL("presentations of one knot were distinguished");
    }
}

TEST_CASE("certificate verification failures") {
  CertifyResult r = certify_knotted(knot("trefoil-gauss"), {dihedral(3)});
  REQUIRE(r.certificate);
  KnottednessCertificate bad = *r.certificate;
  bad.coloring.colors[1] = bad.coloring.colors[1] % 3 + 1;
  CertificateCheck c = verify_certificate(bad);
  CHECK(!c.ok);
  CHECK(c.crossing >= 1);
  CHECK(c.reason.find("crossing") != std::string::npos);

  KnottednessCertificate mono = *r.certificate;
  mono.coloring.colors = {2, 2, 2};
  CertificateCheck m = verify_certificate(mono);
  CHECK(!m.ok);
  CHECK(m.crossing == 0);
  CHECK(m.reason.find("trivial") != std::string::npos);

  KnottednessCertificate shape = *r.certificate;
  shape.coloring.colors.pop_back();
  CHECK(!verify_certificate(shape).ok);
  shape.coloring.colors = {1, 2, 7};
  CHECK(!verify_certificate(shape).ok);
}

TEST_CASE("certificate JSON round trip") {
  CertifyResult r = certify_knotted(knot("4_1-dt"), library_generate("dihedral:7"));
  REQUIRE(r.certificate);
  std::string text = certificate_to_json(*r.certificate);
  CHECK(text.find(kConventionTag) != std::string::npos);
  KnottednessCertificate back = certificate_from_json(text);
  CHECK(back.knot.crossings == r.certificate->knot.crossings);
  CHECK(back.quandle == r.certificate->quandle);
  CHECK(back.coloring == r.certificate->coloring);
  CHECK(back.library_index == 1);
  CHECK(verify_certificate(back).ok);

  CHECK_THROWS_AS(certificate_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
  std::string tampered = text;
  tampered.replace(tampered.find("knotcolor-certificate/1"), 23, "knotcolor-certificate/9");
  CHECK_THROWS_AS(certificate_from_json(tampered), std::invalid_argument);
}
