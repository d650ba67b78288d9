#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paradigme/dictionary.hpp"
#include "paradigme/morphology.hpp"
#include "paradigme/network.hpp"
#include "paradigme/significance.hpp"
#include "paradigme/similarity.hpp"

namespace paradigme {

/// A compiled network together with the tables queries need.
struct Model {
    Network network;
    SignificanceTable significance;
    MorphTable morph;

    Space space(std::size_t steps = kDefaultSteps) const { return {network, significance, morph, steps}; }
};

/// Sidecar paths written next to a compiled network.
std::string significance_sidecar(const std::string &net_path);
std::string morph_sidecar(const std::string &net_path);

struct BuildReport {
    std::size_t nodes = 0;
    std::size_t subreferant_links = 0;
    std::size_t refere_links = 0;
    std::vector<ClosureWarning> warnings;
};

/// Parse, compile and write `out_path` plus its sidecars. An empty morph path selects the default rules.
BuildReport build_model(const std::string &dict_path, const std::string &counts_path, const std::string &morph_path,
                        const std::string &out_path);

/// Compile in memory from already-loaded sources.
Model compile_model(const std::vector<DictEntry> &entries, std::istream &counts, MorphTable morph,
                    std::vector<ClosureWarning> *warnings = nullptr);

void save_model(const Model &model, const std::string &net_path);
Model load_model(const std::string &net_path);

/// Settings shared by the CLI commands. Read from a JSON object with the same key names.
struct Config {
    std::string dictionary;
    std::string counts;
    std::string morph;
    std::string net;
    std::string episodes;
    std::string extra_dictionary;
    std::size_t steps = kDefaultSteps;
    std::size_t top_k = 10;
};

inline constexpr const char *kConfigEnvVar = "PARADIGME_CONFIG";

/// Throws IoError on a missing/malformed file, DomainError when steps < 1.
Config load_config(const std::string &path);

} // namespace paradigme
