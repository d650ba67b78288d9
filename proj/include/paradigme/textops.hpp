#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paradigme/dictionary.hpp"
#include "paradigme/similarity.hpp"

namespace paradigme {

/// Lowercase, split on non-letters; apostrophes survive inside a token ("it's").
std::vector<std::string> tokenize(std::string_view raw);

struct Text {
    std::string raw;
    std::vector<std::string> tokens;
    WordList wordlist;
};

/// Throws DomainError when no token resolves.
Text make_text(const Space &space, std::string raw);

/**
 * Word list for a word outside the network: the tokens of every unit of every
 * entry for `word` in `extra`. A definition token that is itself an extra word
 * is expanded recursively while `depth` allows, otherwise dropped. A word the
 * network already knows yields the singleton list {word}.
 * Throws DomainError when there is no usable definition.
 */
WordList expand_extra_word(const Space &space, std::string_view word, const std::vector<DictEntry> &extra,
                           std::size_t depth = 1);

double similarity_text(const Space &space, const Text &source, const Text &target);

/// c(X) = psi(sum over w in X of s(w) * a(P(X), w)), i.e. sigma(X, X).
double coherence(const Space &space, const Text &text);

class EpisodeStore {
public:
    struct Episode {
        std::string id;
        Text text;
    };

    /// Throws DomainError on a duplicate id.
    void add(std::string id, Text text);

    const std::vector<Episode> &episodes() const noexcept { return episodes_; }
    std::size_t size() const noexcept { return episodes_.size(); }
    bool empty() const noexcept { return episodes_.empty(); }

    /// One JSON object {"id": ..., "text": ...} per line. Throws IoError on bad input.
    static EpisodeStore load_jsonl(const Space &space, const std::string &path);

private:
    std::vector<Episode> episodes_;
};

struct RetrievalHit {
    std::string id;
    double similarity = 0.0;

    bool operator==(const RetrievalHit &) const = default;
};

/// Ranks episodes by sigma(X, X'_i) using a single pattern P(X). Descending, ties by id.
std::vector<RetrievalHit> retrieve(const Space &space, const Text &query, const EpisodeStore &store,
                                   std::size_t top_k);

} // namespace paradigme
