#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "paradigme/dictionary.hpp"
#include "paradigme/morphology.hpp"

namespace paradigme {

using NodeIndex = std::uint32_t;

struct Link {
    NodeIndex target = 0;
    double thickness = 0.0;

    bool operator==(const Link &) const = default;
};

/// Links generated from one definition unit, weighted by the unit's rank.
struct Subreferant {
    double thickness = 0.0;
    std::vector<Link> links;

    bool operator==(const Subreferant &) const = default;
};

struct Node {
    std::string id; // headword_k, k counting entries that share the headword
    std::string headword;
    WordClass word_class = WordClass::Other;
    std::vector<Subreferant> subreferants;
    std::vector<Link> refere; // back-links to every node whose definition mentions this one

    bool operator==(const Node &) const = default;
};

/**
 * Immutable compiled network.
 *
 * Besides the node records it keeps a flattened (CSR) copy of the link
 * structure that the activation kernels iterate over:
 *
 *   node i owns subreferants [sub_begin[i], sub_begin[i+1])
 *   subreferant s owns links [link_begin[s], link_begin[s+1])
 *   node i owns refere links [refere_begin[i], refere_begin[i+1])
 */
class Network {
public:
    Network() = default;
    /// Validates link targets and rebuilds the indices. Throws BuildError.
    explicit Network(std::vector<Node> nodes);

    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<Node> &nodes() const noexcept { return nodes_; }
    const Node &node(NodeIndex i) const { return nodes_.at(i); }

    std::size_t subreferant_link_count() const noexcept { return link_target_.size(); }
    std::size_t refere_link_count() const noexcept { return refere_source_.size(); }

    /// All sense nodes of a headword, in source order. Empty when unknown.
    std::span<const NodeIndex> senses(std::string_view headword) const;
    /// Node for an exact (headword, class) pair, if any.
    std::optional<NodeIndex> find(std::string_view headword, WordClass wc) const;
    std::optional<NodeIndex> find_id(std::string_view id) const;

    const Lexicon &lexicon() const noexcept { return lexicon_; }

    struct Csr {
        std::span<const std::uint32_t> sub_begin;
        std::span<const double> sub_h;
        std::span<const std::uint32_t> link_begin;
        std::span<const NodeIndex> link_target;
        std::span<const double> link_t;
        std::span<const std::uint32_t> refere_begin;
        std::span<const NodeIndex> refere_source;
        std::span<const double> refere_t;
    };
    Csr csr() const noexcept;

private:
    std::vector<Node> nodes_;
    std::map<std::string, std::vector<NodeIndex>, std::less<>> root_index_;
    std::map<std::pair<std::string, WordClass>, NodeIndex> class_index_;
    std::unordered_map<std::string, NodeIndex> id_index_;
    Lexicon lexicon_;

    std::vector<std::uint32_t> sub_begin_;
    std::vector<double> sub_h_;
    std::vector<std::uint32_t> link_begin_;
    std::vector<NodeIndex> link_target_;
    std::vector<double> link_t_;
    std::vector<std::uint32_t> refere_begin_;
    std::vector<NodeIndex> refere_source_;
    std::vector<double> refere_t_;
};

/// A definition token that does not resolve to any headword; it is dropped from link generation.
struct ClosureWarning {
    std::string headword;
    std::size_t unit = 0; // 1-based
    std::string token;
};

std::vector<ClosureWarning> check_closure(const std::vector<DictEntry> &entries, const MorphTable &morph);

/// Occurrences of each root form over every part of every unit. Unresolvable tokens are absent.
std::map<std::string, std::size_t, std::less<>> count_root_occurrences(const std::vector<DictEntry> &entries,
                                                                      const MorphTable &morph);

/// Headword -> node indices (source order) for a list of entries. Node index = entry position.
using SenseIndex = std::map<std::string, std::vector<NodeIndex>, std::less<>>;
SenseIndex make_sense_index(const std::vector<DictEntry> &entries);

/// Root headword of a surface word against the network's lexicon.
std::optional<std::string> resolve_root(const Network &net, const MorphTable &morph, std::string_view word);
/// Sense nodes of a surface word; empty when it does not resolve.
std::span<const NodeIndex> resolve_senses(const Network &net, const MorphTable &morph, std::string_view word);

struct BuildOptions {
    /// Optional per-sense frequency keyed by node id; when a root's senses all
    /// have an entry, its link thickness is split in proportion to these values
    /// instead of uniformly.
    std::unordered_map<std::string, double> sense_frequency;
};

using RootCounts = std::map<std::string, std::size_t, std::less<>>;

/// Everything build_subreferants() reads besides the entry itself.
struct BuildContext {
    const Lexicon &lexicon;
    const SenseIndex &senses;
    const RootCounts &counts;
    const MorphTable &morph;
    const std::vector<std::string> &node_ids; // only consulted for sense_frequency
    const BuildOptions &options;
};

/**
 * Links of each unit of `entry`. A token's weight is the reciprocal of its root's
 * occurrence count, doubled inside the head-part, split over the root's sense
 * nodes, and each subreferant is normalized to sum 1. The returned
 * subreferants carry thickness 0; see subreferant_weights().
 * Throws BuildError when every token of a unit is unresolvable.
 */
std::vector<Subreferant> build_subreferants(const DictEntry &entry, const BuildContext &ctx);

/// Unit-rank weights: raw 2m-1-j for j = 1..m, normalized to sum 1.
std::vector<double> subreferant_weights(std::size_t m);

/// Fill every node's refere with back-links of raw thickness h*t, normalized per node.
void generate_refere(std::vector<Node> &nodes);

struct CompileResult {
    Network network;
    std::vector<ClosureWarning> warnings;
};

/// Deterministic; node order follows entry order.
CompileResult compile(const std::vector<DictEntry> &entries, const MorphTable &morph,
                      const BuildOptions &options = {});

} // namespace paradigme
