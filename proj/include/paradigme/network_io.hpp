#pragma once

#include <iosfwd>
#include <string>

#include "paradigme/network.hpp"

namespace paradigme {

inline constexpr int kNetworkFormatVersion = 1;

/**
 * Versioned JSON form of a compiled network:
 *
 *   {"format_version": 1,
 *    "nodes": [{"id", "headword", "word_class",
 *               "subreferants": [{"h", "links": [[target_index, t], ...]}],
 *               "refere": [[target_index, t], ...]}]}
 *
 * Doubles are written in shortest round-trip form, so save -> load -> save is
 * byte-identical.
 */
std::string network_to_json(const Network &net);
Network network_from_json(const std::string &text);

void save_network(const Network &net, const std::string &path);
/// Throws IoError on a missing file, malformed JSON or an unknown format_version.
Network load_network(const std::string &path);

} // namespace paradigme
