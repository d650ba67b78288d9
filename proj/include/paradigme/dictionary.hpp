#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paradigme {

enum class WordClass { Noun, Verb, Adj, Adv, Other };

/// Accepts the canonical names plus the usual dictionary abbreviations (n, v, adjective, ...).
std::optional<WordClass> parse_word_class(std::string_view tag);
std::string_view to_string(WordClass wc);

using TokenList = std::vector<std::string>;

/// One numbered definition: the head-part gives the broader meaning, det-parts restrict it.
struct Unit {
    TokenList head_part;
    std::vector<TokenList> det_parts;

    bool operator==(const Unit &) const = default;
};

struct DictEntry {
    std::string headword;
    WordClass word_class = WordClass::Other;
    std::vector<Unit> units;

    bool operator==(const DictEntry &) const = default;
};

/**
 * Parse a dictionary written as S-expressions.
 *
 *   entry := "(" headword word-class unit+ ")"
 *   unit  := "(" part+ ")"
 *   part  := "(" token+ ")"
 *
 * A unit may also open with bare tokens instead of a parenthesised head-part,
 * e.g. `(pink (usu for a short time) (of the human skin))`. Tokens are
 * lowercased, `;` starts a comment. Duplicate (headword, word-class) pairs are
 * rejected.
 */
std::vector<DictEntry> parse_dictionary(std::istream &in);
std::vector<DictEntry> parse_dictionary(std::string_view text);
std::vector<DictEntry> load_dictionary(const std::string &path);

/// Canonical S-expression form; every part parenthesised, one unit per line.
std::string serialize_dictionary(const std::vector<DictEntry> &entries);

} // namespace paradigme
