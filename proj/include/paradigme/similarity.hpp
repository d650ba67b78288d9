#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "paradigme/activation.hpp"
#include "paradigme/morphology.hpp"
#include "paradigme/network.hpp"
#include "paradigme/significance.hpp"

namespace paradigme {

/// The read-only pieces every query needs. Cheap to copy; does not own anything.
struct Space {
    const Network &network;
    const SignificanceTable &significance;
    const MorphTable &morph;
    std::size_t steps = kDefaultSteps;
};

/// s(w): the surface form if counted, else its root, else the class average of the root's first sense.
double word_significance(const Space &space, std::string_view word);

struct WordItem {
    std::string root;
    double significance = 0.0;
    double strength = 0.0; // s_i^2 / sum_k s_k

    bool operator==(const WordItem &) const = default;
};

struct WordList {
    std::vector<WordItem> items;
    std::vector<std::string> provenance; // surface tokens that were kept
    std::vector<std::string> dropped;    // surface tokens that did not resolve
};

/// Root-map the tokens, drop unresolvable ones, assign strengths. Throws DomainError if nothing is left.
WordList make_wordlist(const Space &space, const std::vector<std::string> &tokens);

/// P(W): run the network with every item's senses driven at the item's strength.
ActivationPattern activate(const Space &space, const WordList &list);

/// psi(sum over targets of s(w') * a(P, w')), psi clamping to [0,1].
double score(const Space &space, const ActivationPattern &pattern, const WordList &targets);

/// sigma(w, w') = s(w') * a(P(w), w'). Directional. Throws DomainError on unresolvable words.
double similarity_word(const Space &space, std::string_view source, std::string_view target);

double similarity_wordlist(const Space &space, const WordList &source, const WordList &target);

} // namespace paradigme
