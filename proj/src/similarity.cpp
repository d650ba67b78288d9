#include "paradigme/similarity.hpp"

#include <algorithm>

#include "paradigme/errors.hpp"

namespace paradigme {

double word_significance(const Space &space, std::string_view word) {
    const SignificanceTable &sig = space.significance;
    if (sig.contains(word))
        return sig.significance(word);
    const auto root = resolve_root(space.network, space.morph, word);
    if (!root)
        return sig.significance(word);
    if (sig.contains(*root))
        return sig.significance(*root);
    const auto senses = space.network.senses(*root);
    std::optional<WordClass> hint;
    if (!senses.empty())
        hint = space.network.node(senses.front()).word_class;
    return sig.significance(*root, hint);
}

WordList make_wordlist(const Space &space, const std::vector<std::string> &tokens) {
    WordList list;
    double total = 0.0;
    for (const std::string &tok : tokens) {
        auto root = resolve_root(space.network, space.morph, tok);
        if (!root) {
            list.dropped.push_back(tok);
            continue;
        }
        const double s = word_significance(space, tok);
        total += s;
        list.items.push_back({std::move(*root), s, 0.0});
        list.provenance.push_back(tok);
    }
    if (list.items.empty())
        throw DomainError("word list is empty after resolving its words");
    // s * (s / total) rather than s*s / total: a singleton then gets exactly s.
    if (total > 0.0)
        for (WordItem &item : list.items)
            item.strength = item.significance * (item.significance / total);
    return list;
}

ActivationPattern activate(const Space &space, const WordList &list) {
    StimulusVector e = StimulusVector::zeros(space.network.size());
    for (const WordItem &item : list.items)
        e.add(space.network.senses(item.root), item.strength);
    return run(space.network, e, space.steps);
}

double score(const Space &space, const ActivationPattern &pattern, const WordList &targets) {
    double sum = 0.0;
    for (const WordItem &item : targets.items)
        sum += item.significance * observe_nodes(pattern, space.network.senses(item.root));
    return std::clamp(sum, 0.0, 1.0);
}

double similarity_word(const Space &space, std::string_view source, std::string_view target) {
    const double s_source = word_significance(space, source);
    const StimulusVector e = stimulus_for_word(space.network, space.morph, source, s_source);
    const ActivationPattern p = run(space.network, e, space.steps);
    const double a = observe(p, space.network, space.morph, target);
    return word_significance(space, target) * a;
}

double similarity_wordlist(const Space &space, const WordList &source, const WordList &target) {
    if (source.items.empty() || target.items.empty())
        throw DomainError("similarity of an empty word list");
    return score(space, activate(space, source), target);
}

} // namespace paradigme
