#include "paradigme/dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

struct Lexeme {
    enum class Kind { Open, Close, Atom, End } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Lexeme next() {
        skip_blank();
        if (pos_ >= src_.size())
            return {Lexeme::Kind::End, {}, line_, col_};
        const std::size_t line = line_, col = col_;
        const char c = src_[pos_];
        if (c == '(') {
            advance();
            return {Lexeme::Kind::Open, "(", line, col};
        }
        if (c == ')') {
            advance();
            return {Lexeme::Kind::Close, ")", line, col};
        }
        std::string atom;
        while (pos_ < src_.size()) {
            const char d = src_[pos_];
            if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d)))
                break;
            atom.push_back(d);
            advance();
        }
        return {Lexeme::Kind::Atom, lowercase(std::move(atom)), line, col};
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { shift(); }

    std::vector<DictEntry> entries() {
        std::vector<DictEntry> out;
        std::set<std::pair<std::string, WordClass>> seen;
        while (cur_.kind != Lexeme::Kind::End) {
            const Lexeme start = cur_;
            DictEntry e = entry();
            if (!seen.emplace(e.headword, e.word_class).second)
                throw ParseError("duplicate entry '" + e.headword + "' (" + std::string(to_string(e.word_class)) +
                                     ")",
                                 start.line, start.column);
            out.push_back(std::move(e));
        }
        return out;
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, cur_.line, cur_.column); }

    void expect(Lexeme::Kind kind, const char *what) {
        if (cur_.kind != kind)
            fail(std::string("expected ") + what + (cur_.kind == Lexeme::Kind::End ? ", got end of input"
                                                                                    : ", got '" + cur_.text + "'"));
        shift();
    }

    DictEntry entry() {
        expect(Lexeme::Kind::Open, "'(' opening an entry");
        DictEntry e;
        if (cur_.kind != Lexeme::Kind::Atom)
            fail("expected headword");
        e.headword = cur_.text;
        shift();

        // Word class may be written bare (adj) or wrapped ((adj)).
        bool wrapped = false;
        if (cur_.kind == Lexeme::Kind::Open) {
            Lexer probe = lex_;
            const Lexeme inner = probe.next();
            const Lexeme after = probe.next();
            if (inner.kind == Lexeme::Kind::Atom && after.kind == Lexeme::Kind::Close &&
                parse_word_class(inner.text)) {
                shift();
                wrapped = true;
            }
        }
        if (cur_.kind != Lexeme::Kind::Atom)
            fail("expected word class after headword '" + e.headword + "'");
        const auto wc = parse_word_class(cur_.text);
        if (!wc)
            fail("unknown word class '" + cur_.text + "'");
        e.word_class = *wc;
        shift();
        if (wrapped)
            expect(Lexeme::Kind::Close, "')'");

        while (cur_.kind == Lexeme::Kind::Open)
            e.units.push_back(unit());
        if (e.units.empty())
            fail("entry '" + e.headword + "' has no units");
        expect(Lexeme::Kind::Close, "')' closing an entry");
        return e;
    }

    Unit unit() {
        const Lexeme open = cur_;
        expect(Lexeme::Kind::Open, "'(' opening a unit");
        Unit u;
        bool have_head = false;
        if (cur_.kind == Lexeme::Kind::Atom) {
            while (cur_.kind == Lexeme::Kind::Atom) {
                u.head_part.push_back(cur_.text);
                shift();
            }
            have_head = true;
        }
        while (cur_.kind == Lexeme::Kind::Open) {
            TokenList p = part();
            if (!have_head) {
                u.head_part = std::move(p);
                have_head = true;
            } else {
                u.det_parts.push_back(std::move(p));
            }
        }
        if (!have_head)
            throw ParseError("empty head-part", open.line, open.column);
        expect(Lexeme::Kind::Close, "')' closing a unit");
        return u;
    }

    TokenList part() {
        const Lexeme open = cur_;
        expect(Lexeme::Kind::Open, "'(' opening a part");
        TokenList p;
        while (cur_.kind == Lexeme::Kind::Atom) {
            p.push_back(cur_.text);
            shift();
        }
        if (p.empty())
            throw ParseError(cur_.kind == Lexeme::Kind::Open ? "nested part inside a part" : "empty part",
                             open.line, open.column);
        expect(Lexeme::Kind::Close, "')' closing a part");
        return p;
    }

    Lexer lex_;
    Lexeme cur_{Lexeme::Kind::End, {}, 1, 1};
};

void write_part(std::ostringstream &os, const TokenList &p) {
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? " " : "") << p[i];
    os << ')';
}

} // namespace

std::optional<WordClass> parse_word_class(std::string_view tag) {
    const std::string t = lowercase(std::string(tag));
    if (t == "noun" || t == "n")
        return WordClass::Noun;
    if (t == "verb" || t == "v")
        return WordClass::Verb;
    if (t == "adj" || t == "adjective")
        return WordClass::Adj;
    if (t == "adv" || t == "adverb")
        return WordClass::Adv;
    if (t == "other")
        return WordClass::Other;
    return std::nullopt;
}

std::string_view to_string(WordClass wc) {
    switch (wc) {
    case WordClass::Noun:
        return "noun";
    case WordClass::Verb:
        return "verb";
    case WordClass::Adj:
        return "adj";
    case WordClass::Adv:
        return "adv";
    case WordClass::Other:
        break;
    }
    return "other";
}

std::vector<DictEntry> parse_dictionary(std::string_view text) { return Parser(text).entries(); }

std::vector<DictEntry> parse_dictionary(std::istream &in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_dictionary(std::string_view(text));
}

std::vector<DictEntry> load_dictionary(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    return parse_dictionary(in);
}

std::string serialize_dictionary(const std::vector<DictEntry> &entries) {
    std::ostringstream os;
    for (const DictEntry &e : entries) {
        os << '(' << e.headword << ' ' << to_string(e.word_class);
        for (const Unit &u : e.units) {
            os << "\n  (";
            write_part(os, u.head_part);
            for (const TokenList &d : u.det_parts) {
                os << ' ';
                write_part(os, d);
            }
            os << ')';
        }
        os << ")\n";
    }
    return os.str();
}

} // namespace paradigme
