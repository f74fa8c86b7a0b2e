#include <doctest.h>

#include "knotcolor/library.hpp"
#include "support/fixtures.hpp"

using namespace knotcolor;

TEST_CASE("dihedral primes up to 7 in size order") {
  auto lib = library_generate("dihedral:7");
  REQUIRE(lib.size() == 3);
  CHECK(lib[0] == dihedral(3));
  CHECK(lib[1] == dihedral(5));
  CHECK(lib[2] == dihedral(7));
  CHECK(lib[1].name() == "dihedral:5");
}

TEST_CASE("library spec parsing") {
  LibrarySpec s = parse_library_spec("dihedral:13,affine:12,conj:S4,conj:A4,simple");
  CHECK(s.dihedral_max_prime == 13);
  CHECK(s.affine_max_order == 12);
  CHECK(s.groups == std::vector<std::string>{"S4", "A4"});
  CHECK(s.connected_only);
  CHECK(s.simple_only);
  CHECK(!parse_library_spec("all").connected_only);
  CHECK_THROWS_AS(parse_library_spec("dihedral:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_library_spec("conj:S9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_library_spec("cubic:3"), std::invalid_argument);
}

TEST_CASE("generated libraries are deduplicated, verified and sorted") {
  auto lib = library_generate(kDefaultLibrarySpec);
  REQUIRE(!lib.empty());
  for (size_t i = 0; i < lib.size(); ++i) {
    CHECK(lib[i].connected());
    CHECK(!check_axioms(lib[i].table(), lib[i].size()));
    if (i > 0)
      CHECK(lib[i - 1].size() <= lib[i].size());
    for (size_t j = 0; j < i; ++j)
      if (lib[i].size() == lib[j].size() && lib[i].size() <= kCanonicalSizeLimit)
        CHECK(!find_isomorphism(lib[i], lib[j]));
  }
  // dihedral(3) and the S3 transposition class coincide.
  auto with_s3 = library_generate("dihedral:3,conj:S3");
  CHECK(with_s3.size() == 1);
  CHECK(with_s3[0].affine());
  // The A4 3-cycle classes are mirror copies of one quandle.
  auto a4 = library_generate("conj:A4");
  CHECK(a4.size() == 1);
  CHECK(a4[0].size() == 4);
  CHECK(library_generate("conj:S4,all").size() > library_generate("conj:S4").size());
}

TEST_CASE("small quandles of the default library") {
  const auto &small = fixtures::small_quandles();
  std::vector<int> sizes;
  for (const auto &q : small)
    sizes.push_back(q.size());
  CHECK(sizes == std::vector<int>{3, 4, 5, 5, 5, 6, 6});
  int affine_count = 0;
  for (const auto &q : small)
    affine_count += q.affine() ? 1 : 0;
  CHECK(affine_count == 4);
}

TEST_CASE("simple filter") {
  for (const auto &q : library_generate("affine:12,conj:S4,simple"))
    CHECK(is_simple(q));
  auto lib = library_generate("dihedral:13,affine:12,simple");
  for (const auto &q : lib)
    CHECK(q.size() != 9);
}

TEST_CASE("library file loading") {
  LibraryLoad load = library_load(fixtures::data_dir() + "/sample_library.txt");
  REQUIRE(load.rejected.size() == 1);
  CHECK(load.rejected[0].rfind("broken: ", 0) == 0);
  CHECK(load.rejected[0].find("NotDistributive(") != std::string::npos);
  REQUIRE(load.quandles.size() == 2);
  CHECK(load.quandles[0].name() == "trivial2");
  CHECK(load.quandles[1].name() == "tricolor");
  CHECK(load.quandles[1].affine());
  CHECK(!load.quandles[0].affine());

  auto text = library_format(load.quandles);
  auto again = library_parse(text);
  REQUIRE(again.quandles.size() == 2);
  CHECK(again.quandles[1] == load.quandles[1]);
  CHECK(again.rejected.empty());
}

TEST_CASE("structurally malformed library files throw") {
  CHECK_THROWS_AS(library_parse("quandle x 2\n1 2\n"), LibraryFormatError);
  CHECK_THROWS_AS(library_parse("quandle x 2\n1 2\n1\n"), LibraryFormatError);
  CHECK_THROWS_AS(library_parse("table x 2\n1 2\n1 2\n"), LibraryFormatError);
  CHECK_THROWS_AS(library_parse("quandle x 2\n1 2\n1 z\n"), LibraryFormatError);
  CHECK_THROWS_AS(library_load("/nonexistent/lib.txt"), LibraryFormatError);
  CHECK(library_parse("# nothing\n\n").quandles.empty());
}
