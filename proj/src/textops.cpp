#include "paradigme/textops.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include <json.hpp>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

// Bytes >= 0x80 count as letters so UTF-8 sequences stay inside their token.
bool is_letter(unsigned char c) { return std::isalpha(c) || c >= 0x80; }

void expand_into(const Space &space, std::string_view word, const std::vector<DictEntry> &extra,
                 std::size_t depth, std::vector<std::string> &tokens, std::vector<std::string> &dropped) {
    bool found = false;
    for (const DictEntry &e : extra) {
        if (e.headword != word)
            continue;
        found = true;
        for (const Unit &u : e.units) {
            std::vector<const TokenList *> parts{&u.head_part};
            for (const TokenList &d : u.det_parts)
                parts.push_back(&d);
            for (const TokenList *part : parts) {
                for (const std::string &tok : *part) {
                    if (resolve_root(space.network, space.morph, tok))
                        tokens.push_back(tok);
                    else if (depth > 1)
                        expand_into(space, tok, extra, depth - 1, tokens, dropped);
                    else
                        dropped.push_back(tok);
                }
            }
        }
    }
    if (!found)
        dropped.emplace_back(word);
}

} // namespace

std::vector<std::string> tokenize(std::string_view raw) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        while (!cur.empty() && cur.back() == '\'')
            cur.pop_back();
        if (!cur.empty())
            out.push_back(std::move(cur));
        cur.clear();
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto c = static_cast<unsigned char>(raw[i]);
        if (is_letter(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '\'' && !cur.empty() && i + 1 < raw.size() &&
                   is_letter(static_cast<unsigned char>(raw[i + 1]))) {
            cur.push_back('\'');
        } else {
            flush();
        }
    }
    flush();
    return out;
}

Text make_text(const Space &space, std::string raw) {
    Text t;
    t.tokens = tokenize(raw);
    t.raw = std::move(raw);
    t.wordlist = make_wordlist(space, t.tokens);
    return t;
}

WordList expand_extra_word(const Space &space, std::string_view word, const std::vector<DictEntry> &extra,
                           std::size_t depth) {
    if (resolve_root(space.network, space.morph, word))
        return make_wordlist(space, {std::string(word)});

    std::vector<std::string> tokens;
    std::vector<std::string> dropped;
    expand_into(space, word, extra, std::max<std::size_t>(depth, 1), tokens, dropped);
    if (tokens.empty())
        throw DomainError("no definition available for '" + std::string(word) + "'");
    WordList list = make_wordlist(space, tokens);
    list.dropped.insert(list.dropped.end(), dropped.begin(), dropped.end());
    return list;
}

double similarity_text(const Space &space, const Text &source, const Text &target) {
    return similarity_wordlist(space, source.wordlist, target.wordlist);
}

double coherence(const Space &space, const Text &text) {
    if (text.wordlist.items.empty())
        throw DomainError("coherence of an empty text");
    return score(space, activate(space, text.wordlist), text.wordlist);
}

void EpisodeStore::add(std::string id, Text text) {
    for (const Episode &e : episodes_)
        if (e.id == id)
            throw DomainError("duplicate episode id '" + id + "'");
    episodes_.push_back({std::move(id), std::move(text)});
}

EpisodeStore EpisodeStore::load_jsonl(const Space &space, const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    EpisodeStore store;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception &e) {
            throw IoError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") || !j["text"].is_string())
            throw IoError(path + ":" + std::to_string(lineno) + ": expected {\"id\", \"text\"}");
        std::string id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
        store.add(std::move(id), make_text(space, j["text"].get<std::string>()));
    }
    return store;
}

std::vector<RetrievalHit> retrieve(const Space &space, const Text &query, const EpisodeStore &store,
                                   std::size_t top_k) {
    if (store.empty())
        throw DomainError("retrieve: the episode store is empty");
    if (query.wordlist.items.empty())
        throw DomainError("retrieve: empty query");
    const ActivationPattern pattern = activate(space, query.wordlist);

    const auto &episodes = store.episodes();
    std::vector<RetrievalHit> hits(episodes.size());
    const auto n = static_cast<std::int64_t>(episodes.size());
#pragma omp parallel for schedule(dynamic) if (episodes.size() >= 64)
    for (std::int64_t i = 0; i < n; ++i)
        hits[i] = {episodes[i].id, score(space, pattern, episodes[i].text.wordlist)};

    std::sort(hits.begin(), hits.end(), [](const RetrievalHit &a, const RetrievalHit &b) {
        if (a.similarity != b.similarity)
            return a.similarity > b.similarity;
        return a.id < b.id;
    });
    hits.resize(std::min(top_k, hits.size()));
    return hits;
}

} // namespace paradigme
