#include "paradigme/morphology.hpp"

#include <fstream>
#include <sstream>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

// A stripped stem shorter than this is never accepted ("is" must not become "i").
constexpr std::size_t kMinStem = 2;

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \r\t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \r\t");
    return s.substr(b, e - b + 1);
}

AffixRule make_rule(const std::string &affix, std::string replacement, std::set<WordClass> classes) {
    AffixRule r;
    if (affix.size() >= 2 && affix.front() == '-') {
        r.kind = AffixRule::Kind::Suffix;
        r.affix = affix.substr(1);
    } else if (affix.size() >= 2 && affix.back() == '-') {
        r.kind = AffixRule::Kind::Prefix;
        r.affix = affix.substr(0, affix.size() - 1);
    } else {
        throw std::invalid_argument("affix must look like '-suffix' or 'prefix-': '" + affix + "'");
    }
    r.replacement = std::move(replacement);
    r.classes = std::move(classes);
    return r;
}

std::optional<std::string> apply(const AffixRule &r, std::string_view word) {
    if (word.size() < r.affix.size() + kMinStem)
        return std::nullopt;
    if (r.kind == AffixRule::Kind::Suffix) {
        if (!word.ends_with(r.affix))
            return std::nullopt;
        return std::string(word.substr(0, word.size() - r.affix.size())) + r.replacement;
    }
    if (!word.starts_with(r.affix))
        return std::nullopt;
    return r.replacement + std::string(word.substr(r.affix.size()));
}

bool class_allowed(const AffixRule &r, const std::set<WordClass> &have) {
    if (r.classes.empty())
        return true;
    for (WordClass wc : have)
        if (r.classes.count(wc))
            return true;
    return false;
}

} // namespace

Lexicon make_lexicon(const std::vector<DictEntry> &entries) {
    Lexicon lex;
    for (const DictEntry &e : entries)
        lex[e.headword].insert(e.word_class);
    return lex;
}

MorphTable MorphTable::default_english() {
    const std::set<WordClass> any;
    const std::set<WordClass> nv{WordClass::Noun, WordClass::Verb};
    const std::set<WordClass> verb{WordClass::Verb};
    const std::set<WordClass> adj{WordClass::Adj};
    const std::set<WordClass> adj_adv{WordClass::Adj, WordClass::Adv};
    return MorphTable({
        make_rule("-s", "", nv),
        make_rule("-es", "", nv),
        make_rule("-ies", "y", nv),
        make_rule("-ed", "", verb),
        make_rule("-ed", "e", verb),
        make_rule("-ied", "y", verb),
        make_rule("-ing", "", verb),
        make_rule("-ing", "e", verb),
        make_rule("-er", "", adj_adv),
        make_rule("-er", "e", adj_adv),
        make_rule("-ier", "y", adj_adv),
        make_rule("-est", "", adj_adv),
        make_rule("-est", "e", adj_adv),
        make_rule("-iest", "y", adj_adv),
        make_rule("-ly", "", any),
        make_rule("-ily", "y", any),
        make_rule("-ness", "", any),
        make_rule("-iness", "y", any),
        make_rule("-ish", "", any),
        make_rule("-y", "", any),
        make_rule("-y", "e", any),
        make_rule("un-", "", any),
        make_rule("re-", "", verb),
        make_rule("dis-", "", any),
        make_rule("-ment", "", any),
        make_rule("-ful", "", any),
        make_rule("-less", "", any),
        make_rule("-able", "", any),
        make_rule("-able", "e", any),
    });
}

MorphTable MorphTable::parse(std::istream &in) {
    std::vector<AffixRule> rules;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty() || trim(line).front() == '#')
            continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 3)
            throw ParseError("morph rule needs 3 tab-separated columns", lineno, 1);
        std::set<WordClass> classes;
        const std::string cls = trim(cols[2]);
        if (cls != "*" && !cls.empty()) {
            for (const std::string &tag : split(cls, ',')) {
                const auto wc = parse_word_class(trim(tag));
                if (!wc)
                    throw ParseError("unknown word class '" + trim(tag) + "'", lineno, 1);
                classes.insert(*wc);
            }
        }
        try {
            rules.push_back(make_rule(trim(cols[0]), trim(cols[1]), std::move(classes)));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), lineno, 1);
        }
    }
    return MorphTable(std::move(rules));
}

MorphTable MorphTable::load(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    return parse(in);
}

std::string MorphTable::serialize() const {
    std::ostringstream os;
    for (const AffixRule &r : rules_) {
        if (r.kind == AffixRule::Kind::Suffix)
            os << '-' << r.affix;
        else
            os << r.affix << '-';
        os << '\t' << r.replacement << '\t';
        if (r.classes.empty()) {
            os << '*';
        } else {
            bool first = true;
            for (WordClass wc : r.classes) {
                os << (first ? "" : ",") << to_string(wc);
                first = false;
            }
        }
        os << '\n';
    }
    return os.str();
}

std::optional<std::string> MorphTable::strip_once(std::string_view word, const Lexicon &lexicon) const {
    const AffixRule *best = nullptr;
    std::string best_root;
    for (const AffixRule &r : rules_) {
        auto root = apply(r, word);
        if (!root)
            continue;
        const auto it = lexicon.find(*root);
        if (it == lexicon.end() || !class_allowed(r, it->second))
            continue;
        if (!best || r.affix.size() > best->affix.size()) {
            best = &r;
            best_root = std::move(*root);
        }
    }
    if (!best)
        return std::nullopt;
    return best_root;
}

std::optional<std::string> MorphTable::root_form(std::string_view word, const Lexicon &lexicon) const {
    if (lexicon.find(word) != lexicon.end())
        return std::string(word);
    if (auto root = strip_once(word, lexicon))
        return root;

    // Two affixes: peel the longest outer affix whose remainder then lands.
    std::optional<std::string> best;
    std::size_t best_len = 0;
    for (const AffixRule &r : rules_) {
        const auto mid = apply(r, word);
        if (!mid || (best && r.affix.size() <= best_len))
            continue;
        if (auto root = strip_once(*mid, lexicon)) {
            best = std::move(root);
            best_len = r.affix.size();
        }
    }
    return best;
}

} // namespace paradigme
