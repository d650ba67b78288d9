#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paradigme/dictionary.hpp"

namespace paradigme {

/// Headword -> the word classes under which it is defined.
using Lexicon = std::map<std::string, std::set<WordClass>, std::less<>>;

Lexicon make_lexicon(const std::vector<DictEntry> &entries);

struct AffixRule {
    enum class Kind { Prefix, Suffix };

    Kind kind = Kind::Suffix;
    std::string affix;       // without the hyphen
    std::string replacement; // appended (suffix) or prepended (prefix) after stripping
    std::set<WordClass> classes; // classes the resulting root may have; empty = any

    bool operator==(const AffixRule &) const = default;
};

/**
 * Ordered affix-stripping rules mapping derived forms onto headwords.
 *
 * The rule file has one rule per line: `affix<TAB>replacement<TAB>classes`,
 * where affix is `-ish` for a suffix or `un-` for a prefix, classes is a
 * comma list or `*`. Blank lines and `#` comments are ignored.
 */
class MorphTable {
public:
    MorphTable() = default;
    explicit MorphTable(std::vector<AffixRule> rules) : rules_(std::move(rules)) {}

    static MorphTable default_english();
    static MorphTable parse(std::istream &in);
    static MorphTable load(const std::string &path);

    std::string serialize() const;

    const std::vector<AffixRule> &rules() const noexcept { return rules_; }

    /**
     * The headword for `word`: the word itself when it is a headword, else the
     * result of the longest matching affix rule that lands in the lexicon.
     * A second stripping pass is tried when no single rule lands
     * (unhappiness -> happy).
     */
    std::optional<std::string> root_form(std::string_view word, const Lexicon &lexicon) const;

private:
    std::optional<std::string> strip_once(std::string_view word, const Lexicon &lexicon) const;

    std::vector<AffixRule> rules_;
};

} // namespace paradigme
