#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "paradigme/network.hpp"

namespace paradigme {

inline constexpr std::size_t kDefaultSteps = 10;

/// Per-node activity at time `step`; every value lies in [0,1].
struct ActivationPattern {
    std::vector<double> values;
    std::size_t step = 0;

    static ActivationPattern zeros(std::size_t n) { return {std::vector<double>(n, 0.0), 0}; }
};

/// External input e_i held on the network while it runs; every value lies in [0,1].
struct StimulusVector {
    std::vector<double> values;

    static StimulusVector zeros(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
    /// Adds `strength` to each index, clamping the sum to [0,1].
    void add(std::span<const NodeIndex> nodes, double strength);
};

/**
 * Synchronous update kernel. For every node i, reading only `in`:
 *
 *   S_j  = sum_k t_jk * in[target_jk]         over each subreferant j
 *   R    = S_m, m = argmax_j h_j * S_j         (ties: lowest j)
 *   R'   = sum_k t'_k * in[source_k]           over the refere
 *   out  = clamp((R + R') / 2 + e_i, 0, 1)
 *
 * Nodes are distributed over OpenMP threads; every node's arithmetic is
 * identical to the serial kernel, so results are bit-identical.
 */
void step_kernel(const Network::Csr &g, std::span<const double> in, std::span<const double> stimulus,
                 std::span<double> out);

ActivationPattern step(const Network &net, const ActivationPattern &pattern, const StimulusVector &stimulus);

/// Starts from all zeros and applies `steps` updates with the stimulus held constant.
ActivationPattern run(const Network &net, const StimulusVector &stimulus, std::size_t steps = kDefaultSteps);

/// Patterns for T = 0..steps.
std::vector<ActivationPattern> run_trace(const Network &net, const StimulusVector &stimulus,
                                         std::size_t steps = kDefaultSteps);

/// Serial update that walks the Node records instead of the CSR arrays. Kept as
/// the reference the parallel kernel is checked and benchmarked against.
namespace reference {

ActivationPattern step(const Network &net, const ActivationPattern &pattern, const StimulusVector &stimulus);
ActivationPattern run(const Network &net, const StimulusVector &stimulus, std::size_t steps = kDefaultSteps);

} // namespace reference

/// Every sense node of the word's root receives `strength`. Throws DomainError if unresolvable.
StimulusVector stimulus_for_word(const Network &net, const MorphTable &morph, std::string_view word,
                                 double strength);

/// Highest activity over the word's sense nodes. Throws DomainError if unresolvable.
double observe(const ActivationPattern &pattern, const Network &net, const MorphTable &morph,
               std::string_view word);

/// Max of pattern values over `nodes`; 0 for an empty span.
double observe_nodes(const ActivationPattern &pattern, std::span<const NodeIndex> nodes);

} // namespace paradigme
