#include "paradigme/model.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paradigme/errors.hpp"
#include "paradigme/network_io.hpp"

namespace paradigme {

namespace {

std::map<std::string, WordClass, std::less<>> first_classes(const std::vector<DictEntry> &entries) {
    std::map<std::string, WordClass, std::less<>> out;
    for (const DictEntry &e : entries)
        out.emplace(e.headword, e.word_class);
    return out;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path);
    out << content;
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace

std::string significance_sidecar(const std::string &net_path) { return net_path + ".sig.tsv"; }
std::string morph_sidecar(const std::string &net_path) { return net_path + ".morph.tsv"; }

Model compile_model(const std::vector<DictEntry> &entries, std::istream &counts, MorphTable morph,
                    std::vector<ClosureWarning> *warnings) {
    CompileResult compiled = compile(entries, morph);
    if (warnings)
        *warnings = std::move(compiled.warnings);
    return {std::move(compiled.network), build_significance(counts, first_classes(entries)), std::move(morph)};
}

BuildReport build_model(const std::string &dict_path, const std::string &counts_path, const std::string &morph_path,
                        const std::string &out_path) {
    const auto entries = load_dictionary(dict_path);
    MorphTable morph = morph_path.empty() ? MorphTable::default_english() : MorphTable::load(morph_path);
    std::ifstream counts(counts_path);
    if (!counts)
        throw IoError("file not found: " + counts_path);

    BuildReport report;
    const Model model = compile_model(entries, counts, std::move(morph), &report.warnings);
    save_model(model, out_path);
    report.nodes = model.network.size();
    report.subreferant_links = model.network.subreferant_link_count();
    report.refere_links = model.network.refere_link_count();
    return report;
}

void save_model(const Model &model, const std::string &net_path) {
    save_network(model.network, net_path);
    write_file(significance_sidecar(net_path), model.significance.serialize());
    write_file(morph_sidecar(net_path), model.morph.serialize());
}

Model load_model(const std::string &net_path) {
    Model m;
    m.network = load_network(net_path);
    m.significance = load_significance(significance_sidecar(net_path));
    const std::string morph = morph_sidecar(net_path);
    m.morph = std::filesystem::exists(morph) ? MorphTable::load(morph) : MorphTable::default_english();
    return m;
}

Config load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw IoError("config " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw IoError("config " + path + ": expected a JSON object");

    // Relative paths are taken relative to the config file.
    const auto base = std::filesystem::path(path).parent_path();
    auto path_key = [&](const char *key) -> std::string {
        if (!j.contains(key))
            return {};
        const std::filesystem::path p = j[key].get<std::string>();
        return p.is_absolute() || base.empty() ? p.string() : (base / p).string();
    };

    Config c;
    try {
        c.dictionary = path_key("dictionary");
        c.counts = path_key("counts");
        c.morph = path_key("morph");
        c.net = path_key("net");
        c.episodes = path_key("episodes");
        c.extra_dictionary = path_key("extra_dictionary");
        if (j.contains("steps")) {
            const auto steps = j["steps"].get<long long>();
            if (steps < 1)
                throw DomainError("config: steps must be at least 1");
            c.steps = static_cast<std::size_t>(steps);
        }
        if (j.contains("top_k"))
            c.top_k = j["top_k"].get<std::size_t>();
    } catch (const nlohmann::json::exception &e) {
        throw IoError("config " + path + ": " + e.what());
    }
    for (const std::string *p : {&c.dictionary, &c.counts, &c.morph, &c.extra_dictionary})
        if (!p->empty() && !std::filesystem::exists(*p))
            throw IoError("config " + path + ": file not found: " + *p);
    return c;
}

} // namespace paradigme
