#include "paradigme/network_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

using Json = nlohmann::ordered_json;

Json links_to_json(const std::vector<Link> &links) {
    Json arr = Json::array();
    for (const Link &l : links)
        arr.push_back(Json::array({l.target, l.thickness}));
    return arr;
}

std::vector<Link> links_from_json(const Json &arr) {
    std::vector<Link> out;
    out.reserve(arr.size());
    for (const Json &pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw IoError("network: a link must be [target_index, thickness]");
        out.push_back({pair[0].get<NodeIndex>(), pair[1].get<double>()});
    }
    return out;
}

} // namespace

std::string network_to_json(const Network &net) {
    Json doc;
    doc["format_version"] = kNetworkFormatVersion;
    Json nodes = Json::array();
    for (const Node &n : net.nodes()) {
        Json j;
        j["id"] = n.id;
        j["headword"] = n.headword;
        j["word_class"] = std::string(to_string(n.word_class));
        Json subs = Json::array();
        for (const Subreferant &s : n.subreferants) {
            Json sj;
            sj["h"] = s.thickness;
            sj["links"] = links_to_json(s.links);
            subs.push_back(std::move(sj));
        }
        j["subreferants"] = std::move(subs);
        j["refere"] = links_to_json(n.refere);
        nodes.push_back(std::move(j));
    }
    doc["nodes"] = std::move(nodes);
    return doc.dump() + "\n";
}

Network network_from_json(const std::string &text) {
    try {
        const Json doc = Json::parse(text);
        if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
            throw IoError("network: missing format_version");
        const int version = doc["format_version"].get<int>();
        if (version != kNetworkFormatVersion)
            throw IoError("network: unsupported format_version " + std::to_string(version));

        std::vector<Node> nodes;
        for (const Json &j : doc.at("nodes")) {
            Node n;
            n.id = j.at("id").get<std::string>();
            n.headword = j.at("headword").get<std::string>();
            const auto wc = parse_word_class(j.at("word_class").get<std::string>());
            if (!wc)
                throw IoError("network: unknown word_class for node '" + n.id + "'");
            n.word_class = *wc;
            for (const Json &sj : j.at("subreferants"))
                n.subreferants.push_back({sj.at("h").get<double>(), links_from_json(sj.at("links"))});
            n.refere = links_from_json(j.at("refere"));
            nodes.push_back(std::move(n));
        }
        return Network(std::move(nodes));
    } catch (const Json::exception &e) {
        throw IoError(std::string("network: malformed document: ") + e.what());
    } catch (const BuildError &e) {
        throw IoError(std::string("network: inconsistent document: ") + e.what());
    }
}

void save_network(const Network &net, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path);
    out << network_to_json(net);
    if (!out)
        throw IoError("write failed: " + path);
}

Network load_network(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return network_from_json(ss.str());
}

} // namespace paradigme
