#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "paradigme/dictionary.hpp"

namespace paradigme {

/// Normalized information of a word occurring `count` times in an `total`-token corpus.
/// Clamped to [0,1].
double normalized_information(std::uint64_t count, std::uint64_t total);

/// Word significance s(w) from corpus counts, with word-class and global fallbacks.
struct SignificanceTable {
    std::uint64_t total_tokens = 0;
    std::map<std::string, std::uint64_t, std::less<>> counts;
    std::map<std::string, WordClass, std::less<>> classes;
    std::map<WordClass, double> class_averages;
    double global_average = 0.0;

    /// Counted word -> s(w); else class average for `hint`; else the global average.
    double significance(std::string_view word, std::optional<WordClass> hint = {}) const;

    bool contains(std::string_view word) const { return counts.find(word) != counts.end(); }

    std::string serialize() const;
};

/**
 * Read a counts table (`#total<TAB>N` then `word<TAB>count[<TAB>class]`) and
 * compute per-class and global significance averages. `word_classes` supplies
 * a class for rows without a third column.
 */
SignificanceTable build_significance(std::istream &in,
                                     const std::map<std::string, WordClass, std::less<>> &word_classes = {});
SignificanceTable load_significance(const std::string &path,
                                    const std::map<std::string, WordClass, std::less<>> &word_classes = {});

} // namespace paradigme
