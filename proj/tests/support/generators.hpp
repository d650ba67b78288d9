#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paradigme/dictionary.hpp"

namespace paradigme::testing {

struct RandomDictionaryShape {
    std::size_t headwords = 30;
    double homograph_rate = 0.15; // chance a headword gets a second entry of another class
    std::size_t max_units = 4;
    std::size_t max_part_tokens = 4;
    std::size_t max_det_parts = 2;
};

/// A dictionary closed by construction: every token is some headword.
inline std::vector<DictEntry> random_closed_dictionary(std::uint64_t seed, const RandomDictionaryShape &shape = {}) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    std::vector<std::string> words;
    for (std::size_t i = 0; i < shape.headwords; ++i)
        words.push_back("w" + std::to_string(i));

    auto tokens = [&] {
        TokenList p(uniform(1, shape.max_part_tokens));
        for (std::string &t : p)
            t = words[uniform(0, words.size() - 1)];
        return p;
    };
    auto make_entry = [&](const std::string &hw, WordClass wc) {
        DictEntry e{hw, wc, {}};
        const std::size_t m = uniform(1, shape.max_units);
        for (std::size_t j = 0; j < m; ++j) {
            Unit u{tokens(), {}};
            const std::size_t d = uniform(0, shape.max_det_parts);
            for (std::size_t k = 0; k < d; ++k)
                u.det_parts.push_back(tokens());
            e.units.push_back(std::move(u));
        }
        return e;
    };

    std::vector<DictEntry> out;
    std::bernoulli_distribution homograph(shape.homograph_rate);
    for (const std::string &w : words) {
        out.push_back(make_entry(w, WordClass::Noun));
        if (homograph(rng))
            out.push_back(make_entry(w, WordClass::Verb));
    }
    return out;
}

/// n entries of four units; each unit splits tokens_per_entry / 4 headword tokens between its head-part and one det-part.
/// With no homographs this yields n * tokens_per_entry subreferant links.
inline std::vector<DictEntry> synthetic_dictionary(std::size_t n, std::size_t tokens_per_entry, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i)
        words.push_back("w" + std::to_string(i));
    std::vector<DictEntry> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        DictEntry e{words[i], WordClass::Noun, {}};
        // Four units so the argmax over subreferants does real work.
        const std::size_t per_unit = tokens_per_entry / 4;
        for (std::size_t u = 0; u < 4; ++u) {
            Unit unit;
            unit.det_parts.emplace_back();
            for (std::size_t k = 0; k < per_unit; ++k) {
                TokenList &part = k < per_unit / 2 ? unit.head_part : unit.det_parts.front();
                part.push_back(words[pick(rng)]);
            }
            e.units.push_back(std::move(unit));
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace paradigme::testing
