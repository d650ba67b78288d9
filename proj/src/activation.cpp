#include "paradigme/activation.hpp"

#include <algorithm>
#include <string>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

// Below this many nodes the OpenMP fork costs more than the update.
constexpr std::size_t kParallelThreshold = 512;

void check_sizes(std::size_t n, std::size_t pattern, std::size_t stimulus) {
    if (pattern != n || stimulus != n)
        throw DomainError("activation: pattern/stimulus size (" + std::to_string(pattern) + "/" +
                          std::to_string(stimulus) + ") does not match network size " + std::to_string(n));
}

void check_stimulus(const StimulusVector &e) {
    for (double v : e.values)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("activation: stimulus values must lie in [0,1]");
}

inline double update_node(const Network::Csr &g, std::size_t i, std::span<const double> in, double e) {
    double best = -1.0;
    double r = 0.0;
    for (std::uint32_t s = g.sub_begin[i]; s < g.sub_begin[i + 1]; ++s) {
        double sum = 0.0;
        for (std::uint32_t k = g.link_begin[s]; k < g.link_begin[s + 1]; ++k)
            sum += g.link_t[k] * in[g.link_target[k]];
        const double plausibility = g.sub_h[s] * sum;
        if (plausibility > best) {
            best = plausibility;
            r = sum;
        }
    }
    double r_back = 0.0;
    for (std::uint32_t k = g.refere_begin[i]; k < g.refere_begin[i + 1]; ++k)
        r_back += g.refere_t[k] * in[g.refere_source[k]];
    return std::clamp((r + r_back) / 2.0 + e, 0.0, 1.0);
}

} // namespace

void StimulusVector::add(std::span<const NodeIndex> nodes, double strength) {
    for (NodeIndex i : nodes)
        values.at(i) = std::clamp(values.at(i) + strength, 0.0, 1.0);
}

void step_kernel(const Network::Csr &g, std::span<const double> in, std::span<const double> stimulus,
                 std::span<double> out) {
    const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64) if (out.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = update_node(g, static_cast<std::size_t>(i), in, stimulus[i]);
}

ActivationPattern step(const Network &net, const ActivationPattern &pattern, const StimulusVector &stimulus) {
    check_sizes(net.size(), pattern.values.size(), stimulus.values.size());
    ActivationPattern next{std::vector<double>(net.size()), pattern.step + 1};
    step_kernel(net.csr(), pattern.values, stimulus.values, next.values);
    return next;
}

std::vector<ActivationPattern> run_trace(const Network &net, const StimulusVector &stimulus, std::size_t steps) {
    check_sizes(net.size(), net.size(), stimulus.values.size());
    check_stimulus(stimulus);
    std::vector<ActivationPattern> trace;
    trace.reserve(steps + 1);
    trace.push_back(ActivationPattern::zeros(net.size()));
    for (std::size_t t = 0; t < steps; ++t)
        trace.push_back(step(net, trace.back(), stimulus));
    return trace;
}

ActivationPattern run(const Network &net, const StimulusVector &stimulus, std::size_t steps) {
    check_sizes(net.size(), net.size(), stimulus.values.size());
    check_stimulus(stimulus);
    const auto g = net.csr();
    ActivationPattern cur = ActivationPattern::zeros(net.size());
    std::vector<double> next(net.size());
    for (std::size_t t = 0; t < steps; ++t) {
        step_kernel(g, cur.values, stimulus.values, next);
        cur.values.swap(next);
        ++cur.step;
    }
    return cur;
}

namespace reference {

ActivationPattern step(const Network &net, const ActivationPattern &pattern, const StimulusVector &stimulus) {
    check_sizes(net.size(), pattern.values.size(), stimulus.values.size());
    const std::vector<double> &a = pattern.values;
    ActivationPattern next{std::vector<double>(net.size()), pattern.step + 1};
    for (std::size_t i = 0; i < net.size(); ++i) {
        const Node &node = net.nodes()[i];
        double best = -1.0;
        double r = 0.0;
        for (const Subreferant &sub : node.subreferants) {
            double sum = 0.0;
            for (const Link &l : sub.links)
                sum += l.thickness * a[l.target];
            if (sub.thickness * sum > best) {
                best = sub.thickness * sum;
                r = sum;
            }
        }
        double r_back = 0.0;
        for (const Link &l : node.refere)
            r_back += l.thickness * a[l.target];
        next.values[i] = std::clamp((r + r_back) / 2.0 + stimulus.values[i], 0.0, 1.0);
    }
    return next;
}

ActivationPattern run(const Network &net, const StimulusVector &stimulus, std::size_t steps) {
    check_stimulus(stimulus);
    ActivationPattern cur = ActivationPattern::zeros(net.size());
    for (std::size_t t = 0; t < steps; ++t)
        cur = reference::step(net, cur, stimulus);
    return cur;
}

} // namespace reference

StimulusVector stimulus_for_word(const Network &net, const MorphTable &morph, std::string_view word,
                                 double strength) {
    const auto senses = resolve_senses(net, morph, word);
    if (senses.empty())
        throw DomainError("unknown word '" + std::string(word) + "'");
    StimulusVector e = StimulusVector::zeros(net.size());
    e.add(senses, strength);
    return e;
}

double observe_nodes(const ActivationPattern &pattern, std::span<const NodeIndex> nodes) {
    double best = 0.0;
    for (NodeIndex i : nodes)
        best = std::max(best, pattern.values.at(i));
    return best;
}

double observe(const ActivationPattern &pattern, const Network &net, const MorphTable &morph,
               std::string_view word) {
    const auto senses = resolve_senses(net, morph, word);
    if (senses.empty())
        throw DomainError("unknown word '" + std::string(word) + "'");
    return observe_nodes(pattern, senses);
}

} // namespace paradigme
