#include <doctest.h>

#include <random>

#include "paradigme/dictionary.hpp"
#include "paradigme/errors.hpp"
#include "paradigme/network.hpp"
#include "support/fixture.hpp"
#include "support/generators.hpp"

using namespace paradigme;

namespace {

// A four-unit entry for "red" in the annotated layout.
constexpr const char *kRedEntry = R"((red adj                   ; headword, word-class
  ((of the colour)         ; unit 1 -- head-part
   (of blood or fire) )    ;           det-part
  ((of a bright brownish  orange or copper colour)
   (of human hair) )
  (pink                    ; unit 3 -- head-part
   (usu for a short time)  ;           det-part 1
   (of the human skin) )   ;           det-part 2
  ((of a dark pink to dark purple colour)
   (of wine) ))
)";

} // namespace

TEST_CASE("sample red entry parses into four units") {
    const auto entries = parse_dictionary(kRedEntry);
    REQUIRE(entries.size() == 1);
    const DictEntry &red = entries[0];
    CHECK(red.headword == "red");
    CHECK(red.word_class == WordClass::Adj);
    REQUIRE(red.units.size() == 4);
    CHECK(red.units[0].head_part == TokenList{"of", "the", "colour"});
    REQUIRE(red.units[0].det_parts.size() == 1);
    CHECK(red.units[0].det_parts[0] == TokenList{"of", "blood", "or", "fire"});
    // Bare leading tokens form the head-part.
    CHECK(red.units[2].head_part == TokenList{"pink"});
    CHECK(red.units[2].det_parts.size() == 2);
    CHECK(red.units[3].det_parts[0] == TokenList{"of", "wine"});
}

TEST_CASE("minimal entry") {
    const auto entries = parse_dictionary("(x noun ((y)))\n(y noun ((x)))");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].units.size() == 1);
    CHECK(entries[0].units[0].head_part == TokenList{"y"});
    CHECK(entries[0].units[0].det_parts.empty());
}

TEST_CASE("tokens are lowercased and wrapped word classes accepted") {
    const auto entries = parse_dictionary("(Red (ADJ) ((Of The Colour)))");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].headword == "red");
    CHECK(entries[0].units[0].head_part == TokenList{"of", "the", "colour"});
}

TEST_CASE("bundled fixture has 30 entries and is closed") {
    const auto entries = load_dictionary(testing::data_path("fixture.dict"));
    CHECK(entries.size() == 30);
    CHECK(check_closure(entries, MorphTable::load(testing::data_path("morph.tsv"))).empty());
}

TEST_CASE("closure violations are reported, not thrown") {
    const auto entries = parse_dictionary("(x noun ((y zorp)))\n(y noun ((x)) ((x blarg)))");
    const auto warnings = check_closure(entries, MorphTable::default_english());
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].headword == "x");
    CHECK(warnings[0].unit == 1);
    CHECK(warnings[0].token == "zorp");
    CHECK(warnings[1].unit == 2);
    CHECK(warnings[1].token == "blarg");
}

TEST_CASE("syntax errors carry line and column") {
    SUBCASE("unterminated entry") {
        try {
            parse_dictionary("(x noun ((y))\n");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("empty head-part") {
        try {
            parse_dictionary("(x noun\n   ())");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 4);
        }
    }
    SUBCASE("unknown word class") {
        try {
            parse_dictionary("(x gerund ((y)))");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.column() == 4);
            CHECK(std::string(e.what()).find("gerund") != std::string::npos);
        }
    }
    SUBCASE("entry without units") { CHECK_THROWS_AS(parse_dictionary("(x noun)"), ParseError); }
    SUBCASE("stray atom at top level") { CHECK_THROWS_AS(parse_dictionary("x"), ParseError); }
}

TEST_CASE("duplicate headword and class is rejected, homographs are not") {
    CHECK_THROWS_AS(parse_dictionary("(x noun ((x)))\n(x noun ((x)))"), ParseError);
    CHECK(parse_dictionary("(x noun ((x)))\n(x verb ((x)))").size() == 2);
}

TEST_CASE("parse . serialize . parse is idempotent") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto entries = testing::random_closed_dictionary(seed);
        const std::string text = serialize_dictionary(entries);
        const auto again = parse_dictionary(text);
        CHECK(again == entries);
        CHECK(serialize_dictionary(again) == text);
    }
    const auto red = parse_dictionary(kRedEntry);
    CHECK(parse_dictionary(serialize_dictionary(red)) == red);
}
