#include <doctest.h>

#include <set>

#include "sqsq/enumerate.hpp"
#include "sqsq/io.hpp"
#include "sqsq/symmetry.hpp"

using namespace sqsq;

TEST_SUITE("io") {
  TEST_CASE("text emit format") {
    const DissectionDocument doc{Dissection{2, {{0, 0, 1}, {1, 0, 1},
                                                {0, 1, 1}, {1, 1, 1}}},
                                 {"by hand", true}};
    CHECK(emit_text(doc) ==
          "# source: by hand\n"
          "# canonical: yes\n"
          "n=2\n"
          "0 0 1\n"
          "1 0 1\n"
          "0 1 1\n"
          "1 1 1\n");
  }

  TEST_CASE("text round trip with and without metadata") {
    for (const Dissection* d : {&fixtures().eleven, &fixtures().sixteen}) {
      const DissectionDocument plain{*d, {}};
      CHECK(parse_text(emit_text(plain)) == plain);
      const DissectionDocument tagged{*d, {"reference", false}};
      CHECK(parse_text(emit_text(tagged)) == tagged);
    }
  }

  TEST_CASE("parse accepts comments, blank lines and stray spaces") {
    const DissectionDocument doc = parse_text(
        "# a comment\n"
        "\n"
        "n=2\n"
        "  1 0 1\n"
        "0 0 1\t\n"
        "# trailing note\n"
        "0 1 1\n"
        "1 1 1\n");
    CHECK(doc.dissection.n == 2);
    CHECK(doc.dissection.elements.size() == 4);
    // Elements come back in scanline order regardless of input order.
    CHECK(doc.dissection.elements[0] == SquareElement{0, 0, 1});
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_text(""), parse_error);
    CHECK_THROWS_AS(parse_text("0 0 1\n"), parse_error);       // no header
    CHECK_THROWS_AS(parse_text("n=x\n"), parse_error);
    CHECK_THROWS_AS(parse_text("n=2\n0 0\n"), parse_error);    // two fields
    CHECK_THROWS_AS(parse_text("n=2\n0 0 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_text("n=2\na b c\n"), parse_error);
    CHECK_THROWS_AS(parse_text("# canonical: maybe\nn=2\n"), parse_error);
  }

  TEST_CASE("checked parse rejects non-covers") {
    CHECK_THROWS_AS(parse_text_checked("n=2\n0 0 1\n"), document_error);
    CHECK_THROWS_AS(parse_text_checked("n=2\n0 0 2\n0 0 2\n"), document_error);
    CHECK_NOTHROW(parse_text_checked("n=2\n0 0 2\n"));
  }

  TEST_CASE("json document round trip") {
    const DissectionDocument doc{fixtures().eleven, {"fig", true}};
    CHECK(parse_json_document(emit_json(doc)) == doc);
    const DissectionDocument bare{fixtures().sixteen, {}};
    CHECK(parse_json_document(emit_json(bare)) == bare);
    CHECK_THROWS_AS(parse_json_document("not json"), parse_error);
    CHECK_THROWS_AS(parse_json_document("{\"n\": 2}"), parse_error);
  }

  TEST_CASE("json report mirrors the enumeration fields") {
    const EnumerationReport r = enumerate(11);
    const std::string j = emit_json(r);
    CHECK(j.find("\"n\": 11") != std::string::npos);
    CHECK(j.find("\"raw_count\": 2") != std::string::npos);
    CHECK(j.find("\"canonical_count\": 1") != std::string::npos);
    CHECK(j.find("\"reflection_pair_count\": 2") != std::string::npos);
    CHECK(j.find("\"representatives\"") != std::string::npos);
  }

  TEST_CASE("svg contains one labeled rect per element") {
    const std::string svg = to_svg(fixtures().sixteen, 10);
    std::size_t rects = 0, texts = 0, at = 0;
    while ((at = svg.find("<rect", at)) != std::string::npos) ++rects, ++at;
    at = 0;
    while ((at = svg.find("<text", at)) != std::string::npos) ++texts, ++at;
    CHECK(rects == 21);
    CHECK(texts == 21);
    CHECK(svg.find("width=\"160\"") != std::string::npos);
    // The 6x6 center square: x=5*10, screen y=(16-5-6)*10=50.
    CHECK(svg.find("<rect x=\"50\" y=\"50\" width=\"60\" height=\"60\"") !=
          std::string::npos);
  }

  TEST_CASE("fixtures are valid, nontrivial and sized as documented") {
    CHECK(fixtures().eleven.n == 11);
    CHECK(fixtures().sixteen.n == 16);
    CHECK(is_valid(fixtures().eleven));
    CHECK(is_valid(fixtures().sixteen));
    CHECK(is_nontrivial(fixtures().eleven));
    CHECK(is_nontrivial(fixtures().sixteen));
    // Four 4x4 corners and four 3x3 border squares on the 11x11.
    const auto corners = corner_elements(fixtures().eleven);
    for (const auto& e : corners) CHECK(e.s == 4);
    unsigned threes = 0;
    for (const auto& e : border_elements(fixtures().eleven))
      if (e.s == 3) ++threes;
    CHECK(threes == 4);
  }
}
