#include "paradigme/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

void check_link(const Link &l, std::size_t n, const std::string &owner) {
    if (l.target >= n)
        throw BuildError("node '" + owner + "' links to missing node index " + std::to_string(l.target));
    if (!std::isfinite(l.thickness) || l.thickness < 0.0)
        throw BuildError("node '" + owner + "' has a link with invalid thickness");
}

void normalize(std::vector<Link> &links) {
    double sum = 0.0;
    for (const Link &l : links)
        sum += l.thickness;
    if (sum <= 0.0)
        return;
    for (Link &l : links)
        l.thickness /= sum;
}

template <typename Fn>
void for_each_token(const Unit &u, Fn &&fn) {
    for (const std::string &tok : u.head_part)
        fn(tok, true);
    for (const TokenList &part : u.det_parts)
        for (const std::string &tok : part)
            fn(tok, false);
}

} // namespace

Network::Network(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    const std::size_t n = nodes_.size();
    sub_begin_.reserve(n + 1);
    refere_begin_.reserve(n + 1);
    sub_begin_.push_back(0);
    link_begin_.push_back(0);
    refere_begin_.push_back(0);

    for (NodeIndex i = 0; i < n; ++i) {
        const Node &node = nodes_[i];
        if (!id_index_.emplace(node.id, i).second)
            throw BuildError("duplicate node id '" + node.id + "'");
        root_index_[node.headword].push_back(i);
        class_index_.emplace(std::pair{node.headword, node.word_class}, i);
        lexicon_[node.headword].insert(node.word_class);

        for (const Subreferant &s : node.subreferants) {
            if (!std::isfinite(s.thickness) || s.thickness < 0.0)
                throw BuildError("node '" + node.id + "' has a subreferant with invalid thickness");
            sub_h_.push_back(s.thickness);
            for (const Link &l : s.links) {
                check_link(l, n, node.id);
                link_target_.push_back(l.target);
                link_t_.push_back(l.thickness);
            }
            link_begin_.push_back(static_cast<std::uint32_t>(link_target_.size()));
        }
        sub_begin_.push_back(static_cast<std::uint32_t>(sub_h_.size()));

        for (const Link &l : node.refere) {
            check_link(l, n, node.id);
            refere_source_.push_back(l.target);
            refere_t_.push_back(l.thickness);
        }
        refere_begin_.push_back(static_cast<std::uint32_t>(refere_source_.size()));
    }
}

std::span<const NodeIndex> Network::senses(std::string_view headword) const {
    const auto it = root_index_.find(headword);
    if (it == root_index_.end())
        return {};
    return it->second;
}

std::optional<NodeIndex> Network::find(std::string_view headword, WordClass wc) const {
    const auto it = class_index_.find(std::pair{std::string(headword), wc});
    if (it == class_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<NodeIndex> Network::find_id(std::string_view id) const {
    const auto it = id_index_.find(std::string(id));
    if (it == id_index_.end())
        return std::nullopt;
    return it->second;
}

Network::Csr Network::csr() const noexcept {
    return {sub_begin_, sub_h_, link_begin_, link_target_, link_t_, refere_begin_, refere_source_, refere_t_};
}

std::optional<std::string> resolve_root(const Network &net, const MorphTable &morph, std::string_view word) {
    return morph.root_form(word, net.lexicon());
}

std::span<const NodeIndex> resolve_senses(const Network &net, const MorphTable &morph, std::string_view word) {
    const auto root = resolve_root(net, morph, word);
    if (!root)
        return {};
    return net.senses(*root);
}

std::vector<ClosureWarning> check_closure(const std::vector<DictEntry> &entries, const MorphTable &morph) {
    const Lexicon lex = make_lexicon(entries);
    std::vector<ClosureWarning> out;
    for (const DictEntry &e : entries) {
        for (std::size_t j = 0; j < e.units.size(); ++j) {
            for_each_token(e.units[j], [&](const std::string &tok, bool) {
                if (!morph.root_form(tok, lex))
                    out.push_back({e.headword, j + 1, tok});
            });
        }
    }
    return out;
}

RootCounts count_root_occurrences(const std::vector<DictEntry> &entries, const MorphTable &morph) {
    const Lexicon lex = make_lexicon(entries);
    RootCounts counts;
    for (const DictEntry &e : entries)
        for (const Unit &u : e.units)
            for_each_token(u, [&](const std::string &tok, bool) {
                if (auto root = morph.root_form(tok, lex))
                    ++counts[*root];
            });
    return counts;
}

SenseIndex make_sense_index(const std::vector<DictEntry> &entries) {
    SenseIndex idx;
    for (NodeIndex i = 0; i < entries.size(); ++i)
        idx[entries[i].headword].push_back(i);
    return idx;
}

std::vector<Subreferant> build_subreferants(const DictEntry &entry, const BuildContext &ctx) {
    std::vector<Subreferant> out;
    out.reserve(entry.units.size());
    for (std::size_t j = 0; j < entry.units.size(); ++j) {
        Subreferant sub;
        for_each_token(entry.units[j], [&](const std::string &tok, bool in_head) {
            const auto root = ctx.morph.root_form(tok, ctx.lexicon);
            if (!root)
                return;
            const auto count = ctx.counts.find(*root);
            const auto senses = ctx.senses.find(*root);
            if (count == ctx.counts.end() || count->second == 0 || senses == ctx.senses.end())
                throw BuildError("no occurrence count for root '" + *root + "'");

            double t = 1.0 / static_cast<double>(count->second);
            if (in_head)
                t *= 2.0;

            const std::vector<NodeIndex> &targets = senses->second;
            std::vector<double> share(targets.size(), 1.0);
            if (!ctx.options.sense_frequency.empty()) {
                bool all = true;
                for (std::size_t s = 0; s < targets.size() && all; ++s) {
                    const auto f = targets[s] < ctx.node_ids.size()
                                       ? ctx.options.sense_frequency.find(ctx.node_ids[targets[s]])
                                       : ctx.options.sense_frequency.end();
                    all = f != ctx.options.sense_frequency.end() && f->second > 0.0;
                    if (all)
                        share[s] = f->second;
                }
                if (!all)
                    std::fill(share.begin(), share.end(), 1.0);
            }
            const double total = std::accumulate(share.begin(), share.end(), 0.0);
            for (std::size_t s = 0; s < targets.size(); ++s)
                sub.links.push_back({targets[s], t * share[s] / total});
        });
        if (sub.links.empty())
            throw BuildError("unit " + std::to_string(j + 1) + " of '" + entry.headword +
                             "' has no resolvable tokens");
        normalize(sub.links);
        out.push_back(std::move(sub));
    }
    return out;
}

std::vector<double> subreferant_weights(std::size_t m) {
    if (m == 0)
        throw BuildError("subreferant_weights: an entry needs at least one unit");
    // Raw weight is 2m-1-j = 0 for a lone unit; it still carries the whole node.
    if (m == 1)
        return {1.0};
    std::vector<double> h(m);
    double sum = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
        h[j - 1] = static_cast<double>(2 * m - 1 - j);
        sum += h[j - 1];
    }
    for (double &x : h)
        x /= sum;
    return h;
}

void generate_refere(std::vector<Node> &nodes) {
    for (Node &n : nodes)
        n.refere.clear();
    for (NodeIndex i = 0; i < nodes.size(); ++i)
        for (const Subreferant &s : nodes[i].subreferants)
            for (const Link &l : s.links)
                nodes.at(l.target).refere.push_back({i, s.thickness * l.thickness});
    for (Node &n : nodes)
        normalize(n.refere);
}

CompileResult compile(const std::vector<DictEntry> &entries, const MorphTable &morph, const BuildOptions &options) {
    if (entries.empty())
        throw BuildError("cannot compile an empty dictionary");

    CompileResult result;
    result.warnings = check_closure(entries, morph);

    const Lexicon lexicon = make_lexicon(entries);
    const SenseIndex senses = make_sense_index(entries);
    const RootCounts counts = count_root_occurrences(entries, morph);

    std::vector<Node> nodes(entries.size());
    std::vector<std::string> ids(entries.size());
    std::map<std::string, std::size_t, std::less<>> seen;
    for (std::size_t i = 0; i < entries.size(); ++i)
        ids[i] = entries[i].headword + "_" + std::to_string(++seen[entries[i].headword]);

    const BuildContext ctx{lexicon, senses, counts, morph, ids, options};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Node &node = nodes[i];
        node.id = ids[i];
        node.headword = entries[i].headword;
        node.word_class = entries[i].word_class;
        node.subreferants = build_subreferants(entries[i], ctx);
        const auto h = subreferant_weights(node.subreferants.size());
        for (std::size_t j = 0; j < h.size(); ++j)
            node.subreferants[j].thickness = h[j];
    }
    generate_refere(nodes);
    result.network = Network(std::move(nodes));
    return result;
}

} // namespace paradigme
