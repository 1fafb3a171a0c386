// Parametric group builders, the frozen default catalog, the two text file
// formats (multiplication-table files and generator-permutation files), and
// the manifest grammar.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "submod/catalog.hpp"
#include "submod/group.hpp"

using namespace submod;

namespace {

// writes content to a throwaway file in the working directory and removes it
// when the scope ends
struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builders produce the advertised groups") {
  CHECK(build_group(BuilderSpec::cyclic(1)).order() == 1);
  GroupTable c6 = build_group(BuilderSpec::cyclic(6));
  CHECK(c6.order() == 6);
  CHECK(c6.abelian());
  CHECK(c6.exponent() == 6);
  CHECK(c6.label() == "C6");

  GroupTable ea = build_group(BuilderSpec::elementary_abelian(2, 3));
  CHECK(ea.order() == 8);
  CHECK(ea.exponent() == 2);
  CHECK(ea.abelian());

  GroupTable d8 = build_group(BuilderSpec::dihedral(8));
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.abelian());
  CHECK(d8.exponent() == 4);
  CHECK(d8.element_order(1) == 4);  // rotation
  CHECK(d8.element_order(4) == 2);  // reflection

  GroupTable dic8 = build_group(BuilderSpec::dicyclic(8));
  CHECK(dic8.order() == 8);
  CHECK_FALSE(dic8.abelian());
  int invol = 0;
  for (int x = 0; x < 8; ++x) invol += dic8.element_order(x) == 2;
  CHECK(invol == 1);  // quaternion: unique involution

  CHECK(build_group(BuilderSpec::symmetric(4)).order() == 24);
  CHECK(build_group(BuilderSpec::symmetric(5)).order() == 120);
  CHECK(build_group(BuilderSpec::alternating(4)).order() == 12);
  CHECK(build_group(BuilderSpec::alternating(5)).order() == 60);
  CHECK(build_group(BuilderSpec::alternating(1)).order() == 1);
}

TEST_CASE("semidirect builder honours the action parameter") {
  GroupTable f5 = build_group(BuilderSpec::semidirect_cyclic(5, 4, 2));
  CHECK(f5.order() == 20);
  CHECK(f5.exponent() == 20);
  CHECK_FALSE(f5.abelian());
  CHECK(center(f5).count() == 1);
  CHECK(f5.element_order(1) == 4);  // (0,1)
  CHECK(f5.element_order(4) == 5);  // (1,0)
  // (1,0) conjugated by (0,1) is (k,0) = (2,0), index 8
  CHECK(f5.conj(1, 4) == 8);

  // k = 1 is the trivial action: a plain direct product, here cyclic
  GroupTable c20 = build_group(BuilderSpec::semidirect_cyclic(5, 4, 1));
  CHECK(c20.abelian());
  CHECK(c20.exponent() == 20);

  GroupTable d10 = build_group(BuilderSpec::semidirect_cyclic(5, 2, 4));
  CHECK(d10.order() == 10);
  CHECK_FALSE(d10.abelian());
}

TEST_CASE("builder parameter validation") {
  CHECK_THROWS_AS(build_group(BuilderSpec::cyclic(0)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::elementary_abelian(4, 2)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::elementary_abelian(2, 0)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::dihedral(7)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::dicyclic(6)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::symmetric(6)), UnsupportedSize);
  CHECK_THROWS_AS(build_group(BuilderSpec::alternating(6)), UnsupportedSize);
  CHECK_THROWS_AS(build_group(BuilderSpec::symmetric(0)), UnsupportedSize);
  // k^n != 1 mod m
  CHECK_THROWS_AS(build_group(BuilderSpec::semidirect_cyclic(5, 3, 2)), BadParameters);
  // k not a unit mod m
  CHECK_THROWS_AS(build_group(BuilderSpec::semidirect_cyclic(5, 4, 0)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::semidirect_cyclic(5, 4, 5)), BadParameters);
  CHECK_THROWS_AS(build_group(BuilderSpec::product({})), BadParameters);
}

TEST_CASE("direct products use row-major pair numbering") {
  GroupTable p = build_group(
      BuilderSpec::product({BuilderSpec::symmetric(3), BuilderSpec::cyclic(2)}));
  GroupTable s3 = build_group(BuilderSpec::symmetric(3));
  CHECK(p.order() == 12);
  CHECK(p.label() == "S3 x C2");
  for (int a1 = 0; a1 < 6; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 6; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          CHECK(p.mul(a1 * 2 + b1, a2 * 2 + b2) == s3.mul(a1, a2) * 2 + (b1 + b2) % 2);

  GroupTable trip = build_group(BuilderSpec::product(
      {BuilderSpec::cyclic(2), BuilderSpec::cyclic(3), BuilderSpec::cyclic(5)}));
  CHECK(trip.order() == 30);
  CHECK(trip.exponent() == 30);
}

TEST_CASE("builder specs print their canonical text form") {
  CHECK(BuilderSpec::cyclic(6).to_string() == "C6");
  CHECK(BuilderSpec::elementary_abelian(2, 3).to_string() == "EA(2,3)");
  CHECK(BuilderSpec::dihedral(8).to_string() == "D8");
  CHECK(BuilderSpec::dicyclic(12).to_string() == "Dic12");
  CHECK(BuilderSpec::symmetric(4).to_string() == "S4");
  CHECK(BuilderSpec::alternating(5).to_string() == "A5");
  CHECK(BuilderSpec::semidirect_cyclic(5, 4, 2).to_string() == "SDP(5,4,2)");
  CHECK(BuilderSpec::product({BuilderSpec::symmetric(3), BuilderSpec::cyclic(2)}).to_string() ==
        "S3 x C2");
  CHECK(BuilderSpec::from_file("g.txt").to_string() == "file(g.txt)");
}

TEST_CASE("the default catalog is frozen: 78 buildable entries, unique labels") {
  auto cat = default_catalog();
  CHECK(cat.size() == 78);
  std::set<std::string> labels;
  for (const auto& e : cat) CHECK(labels.insert(e.label).second);
  CHECK(labels.count("C1"));
  CHECK(labels.count("F5"));
  CHECK(labels.count("A5"));
  CHECK(labels.count("S3"));
  CHECK(labels.count("EA(2,5)"));
  CHECK(labels.count("A5 x C2"));
  for (const auto& e : cat) {
    GroupTable g = build_group(e.spec);
    CHECK(g.order() >= 1);
    CHECK(g.order() <= 120);
  }
}

TEST_CASE("manifest hashing is stable and sensitive to content") {
  auto cat = default_catalog();
  CHECK(manifest_hash(cat) == manifest_hash(default_catalog()));
  CHECK(manifest_hash(cat).size() == 16);
  auto fewer = cat;
  fewer.pop_back();
  CHECK(manifest_hash(fewer) != manifest_hash(cat));
  auto relabeled = cat;
  relabeled[0].label = "renamed";
  CHECK(manifest_hash(relabeled) != manifest_hash(cat));
}

TEST_CASE("table files round-trip through write and parse") {
  for (auto spec : {BuilderSpec::symmetric(3), BuilderSpec::semidirect_cyclic(5, 4, 2)}) {
    GroupTable g = build_group(spec);
    std::ostringstream os;
    write_cayley(g, os);
    std::istringstream is(os.str());
    GroupTable back = parse_cayley(is, "roundtrip");
    CHECK(back.label() == g.label());
    REQUIRE(back.order() == g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
  }
}

TEST_CASE("table file parsing reports malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return parse_cayley(is, "test");
  };
  CHECK(parse("order 2\n0 1\n1 0\n").order() == 2);
  CHECK(parse("label two\norder 2\n0 1\n1 0\n").label() == "two");
  // blank lines between rows are fine
  CHECK(parse("order 2\n\n0 1\n\n1 0\n").order() == 2);
  CHECK_THROWS_AS(parse(""), ParseError);                          // missing header
  CHECK_THROWS_AS(parse("degree 2\n0 1\n1 0\n"), ParseError);      // wrong keyword
  CHECK_THROWS_AS(parse("order x\n"), ParseError);                 // bad value
  CHECK_THROWS_AS(parse("order 0\n"), ParseError);                 // nonpositive
  CHECK_THROWS_AS(parse("order 2\n0 1\n"), ParseError);            // missing rows
  CHECK_THROWS_AS(parse("order 2\n0 1 0\n1 0 1\n"), ParseError);   // wrong row length
  CHECK_THROWS_AS(parse("order 2\n0 1\n1 2\n"), NotClosed);        // parsed, then invalid
}

TEST_CASE("permutation files close their generators in the regular representation") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return parse_perm(is, "test");
  };
  GroupTable s3 = parse("degree 3\n1 0 2\n1 2 0\n");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.abelian());
  GroupTable c3 = parse("degree 3\n1 2 0\n");
  CHECK(c3.order() == 3);
  // no generators: just the identity
  CHECK(parse("degree 4\n").order() == 1);
  CHECK(parse("label x\ndegree 2\n1 0\n").label() == "x");

  CHECK_THROWS_AS(parse("degree 3\n0 0 1\n"), ParseError);   // not a permutation
  CHECK_THROWS_AS(parse("degree 3\n0 1\n"), ParseError);     // wrong image count
  CHECK_THROWS_AS(parse("degree 3\n0 1 3\n"), ParseError);   // image out of range
  CHECK_THROWS_AS(parse("order 3\n1 2 0\n"), ParseError);    // wrong keyword
  // the full symmetric group of degree 8 exceeds the closure cap
  CHECK_THROWS_AS(parse("degree 8\n1 0 2 3 4 5 6 7\n1 2 3 4 5 6 7 0\n"),
                  ClosureBudgetExceeded);
}

TEST_CASE("group files dispatch on their header line") {
  GroupTable s3 = build_group(BuilderSpec::symmetric(3));
  std::ostringstream os;
  write_cayley(s3, os);
  TempFile tab("tmp_table_file.txt", os.str());
  CHECK(parse_group_file(tab.path).order() == 6);

  TempFile perm("tmp_perm_file.txt", "degree 3\n1 0 2\n1 2 0\n");
  GroupTable viaperm = parse_group_file(perm.path);
  CHECK(viaperm.order() == 6);

  TempFile junk("tmp_junk_file.txt", "hello world\n");
  CHECK_THROWS_AS(parse_group_file(junk.path), ParseError);
  CHECK_THROWS_AS(parse_group_file("does_not_exist.txt"), ParseError);
  CHECK_THROWS_AS(parse_cayley_file("does_not_exist.txt"), ParseError);
  CHECK_THROWS_AS(parse_perm_file("does_not_exist.txt"), ParseError);
}

TEST_CASE("file-backed builder specs load through the same dispatch") {
  TempFile perm("tmp_spec_file.txt", "label loaded\ndegree 3\n1 0 2\n1 2 0\n");
  GroupTable g = build_group(BuilderSpec::from_file(perm.path));
  CHECK(g.order() == 6);
  CHECK(g.label() == "loaded");
}

TEST_CASE("manifest grammar: labels, expressions, comments") {
  std::istringstream in(
      "G1 = C6\n"
      "S3 x C2\n"
      "# a comment line\n"
      "\n"
      "pair = EA(2,2) x C3   # trailing comment\n"
      "Dic8\n"
      "frob = SDP(5,4,2)\n"
      "loaded = file(some/path.txt)\n");
  auto entries = parse_manifest(in);
  REQUIRE(entries.size() == 6);
  CHECK(entries[0].label == "G1");
  CHECK(entries[0].spec.to_string() == "C6");
  CHECK(entries[1].label == "S3 x C2");
  CHECK(entries[1].spec.kind == BuilderSpec::Kind::Product);
  CHECK(entries[2].label == "pair");
  CHECK(entries[2].spec.to_string() == "EA(2,2) x C3");
  CHECK(entries[3].label == "Dic8");
  CHECK(entries[3].spec.kind == BuilderSpec::Kind::Dicyclic);
  CHECK(entries[4].spec.to_string() == "SDP(5,4,2)");
  CHECK(entries[5].spec.kind == BuilderSpec::Kind::FromFile);
  CHECK(entries[5].spec.path == "some/path.txt");
}

TEST_CASE("manifest expressions parse products of any length") {
  std::istringstream in("C2 x C3 x C5\n");
  auto entries = parse_manifest(in);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].spec.factors.size() == 3);
  CHECK(entries[0].spec.to_string() == "C2 x C3 x C5");
  CHECK(entries[0].label == "C2 x C3 x C5");
}

TEST_CASE("manifest parse errors carry the line number") {
  auto parse_line = [](const std::string& text) {
    std::istringstream in(text);
    return parse_manifest(in);
  };
  CHECK_THROWS_AS(parse_line("C\n"), ParseError);            // missing number
  CHECK_THROWS_AS(parse_line("Q8\n"), ParseError);           // unknown family
  CHECK_THROWS_AS(parse_line("SDP(5,4)\n"), ParseError);     // wrong arity
  CHECK_THROWS_AS(parse_line("EA(2,2\n"), ParseError);       // unterminated
  CHECK_THROWS_AS(parse_line("file(x\n"), ParseError);       // unterminated
  CHECK_THROWS_AS(parse_line("C6 trailing\n"), ParseError);  // garbage after expr
  CHECK_THROWS_AS(parse_line("C2 xC3\n"), ParseError);       // 'x' must be separated
  CHECK_THROWS_AS(parse_manifest_file("does_not_exist.txt"), ParseError);
  try {
    parse_line("C6\nC\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("labeled empty expressions are skipped like blank lines") {
  std::istringstream in("X =\nC2\n");
  auto entries = parse_manifest(in);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].label == "C2");
}
