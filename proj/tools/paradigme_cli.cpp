// paradigme: build a semantic network from a closed dictionary and query it.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paradigme/activation.hpp"
#include "paradigme/errors.hpp"
#include "paradigme/model.hpp"
#include "paradigme/similarity.hpp"
#include "paradigme/textops.hpp"

namespace {

using namespace paradigme;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void warn_dropped(const WordList &list) {
    for (const std::string &tok : list.dropped)
        std::cerr << "warning: '" << tok << "' does not resolve; dropped\n";
}

struct Options {
    std::string config_path;
    std::string net;
    std::size_t steps = 0; // 0: take from config
    std::size_t top_k = 0;
    std::string extra;
};

struct Session {
    Config config;
    Model model;
    std::vector<DictEntry> extra;
    std::size_t steps = kDefaultSteps;

    Space space() const { return model.space(steps); }
};

Config resolve_config(const Options &opt) {
    std::string path = opt.config_path;
    if (path.empty())
        if (const char *env = std::getenv(kConfigEnvVar))
            path = env;
    return path.empty() ? Config{} : load_config(path);
}

Session open_session(const Options &opt) {
    Session s;
    s.config = resolve_config(opt);
    const std::string net = opt.net.empty() ? s.config.net : opt.net;
    if (net.empty())
        throw IoError("no compiled network given (use --net or a config file)");
    s.model = load_model(net);
    s.steps = opt.steps ? opt.steps : s.config.steps;
    const std::string extra = opt.extra.empty() ? s.config.extra_dictionary : opt.extra;
    if (!extra.empty())
        s.extra = load_dictionary(extra);
    return s;
}

// A word the network knows stays a single word; otherwise fall back to its definition.
WordList word_or_definition(const Session &s, const std::string &word) {
    const Space space = s.space();
    if (resolve_root(space.network, space.morph, word))
        return make_wordlist(space, {word});
    if (s.extra.empty())
        throw DomainError("unknown word '" + word + "'");
    std::cerr << "note: '" << word << "' is not in the network; using its definition\n";
    WordList list = expand_extra_word(space, word, s.extra);
    warn_dropped(list);
    return list;
}

Text text_arg(const Space &space, const std::string &arg, bool from_file) {
    Text t = make_text(space, from_file ? read_file(arg) : arg);
    warn_dropped(t.wordlist);
    return t;
}

int cmd_build(const Options &opt, std::string dict, std::string counts, std::string morph, std::string out) {
    const Config cfg = resolve_config(opt);
    if (dict.empty())
        dict = cfg.dictionary;
    if (counts.empty())
        counts = cfg.counts;
    if (morph.empty())
        morph = cfg.morph;
    if (out.empty())
        out = opt.net.empty() ? cfg.net : opt.net;
    if (dict.empty() || counts.empty() || out.empty())
        throw IoError("build needs --dict, --counts and --out (or a config file)");

    const BuildReport r = build_model(dict, counts, morph, out);
    for (const ClosureWarning &w : r.warnings)
        std::cerr << "warning: '" << w.token << "' in unit " << w.unit << " of '" << w.headword
                  << "' has no entry; dropped\n";
    std::cout << "nodes\t" << r.nodes << '\n'
              << "subreferant_links\t" << r.subreferant_links << '\n'
              << "refere_links\t" << r.refere_links << '\n'
              << "closure_warnings\t" << r.warnings.size() << '\n';
    return kExitOk;
}

int cmd_sim(const Options &opt, const std::string &w1, const std::string &w2) {
    const Session s = open_session(opt);
    const Space space = s.space();
    double sigma;
    if (resolve_root(space.network, space.morph, w1) && resolve_root(space.network, space.morph, w2))
        sigma = similarity_word(space, w1, w2);
    else
        sigma = similarity_wordlist(space, word_or_definition(s, w1), word_or_definition(s, w2));
    std::cout << fixed6(sigma) << '\n';
    return kExitOk;
}

int cmd_pattern(const Options &opt, const std::vector<std::string> &words) {
    const Session s = open_session(opt);
    const Space space = s.space();
    const WordList list = make_wordlist(space, words);
    warn_dropped(list);
    const ActivationPattern p = activate(space, list);

    std::vector<NodeIndex> order(p.values.size());
    for (NodeIndex i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeIndex a, NodeIndex b) { return p.values[a] > p.values[b]; });
    const std::size_t k = opt.top_k ? opt.top_k : s.config.top_k;
    order.resize(std::min(k, order.size()));
    for (NodeIndex i : order)
        std::cout << space.network.node(i).id << '\t' << fixed6(p.values[i]) << '\n';
    return kExitOk;
}

int cmd_simtext(const Options &opt, const std::string &a, const std::string &b, bool files) {
    const Session s = open_session(opt);
    const Space space = s.space();
    std::cout << fixed6(similarity_text(space, text_arg(space, a, files), text_arg(space, b, files))) << '\n';
    return kExitOk;
}

int cmd_coherence(const Options &opt, const std::string &text, bool file) {
    const Session s = open_session(opt);
    const Space space = s.space();
    std::cout << fixed6(coherence(space, text_arg(space, text, file))) << '\n';
    return kExitOk;
}

int cmd_retrieve(const Options &opt, const std::string &text, bool file, std::string store_path) {
    const Session s = open_session(opt);
    const Space space = s.space();
    if (store_path.empty())
        store_path = s.config.episodes;
    if (store_path.empty())
        throw IoError("retrieve needs --store (or 'episodes' in the config file)");
    const EpisodeStore store = EpisodeStore::load_jsonl(space, store_path);
    const std::size_t k = opt.top_k ? opt.top_k : s.config.top_k;
    for (const RetrievalHit &hit : retrieve(space, text_arg(space, text, file), store, k))
        std::cout << hit.id << '\t' << fixed6(hit.similarity) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Semantic similarity by spreading activation over a dictionary network"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config_path, "JSON config file (default: $PARADIGME_CONFIG)");
    app.add_option("--net", opt.net, "Compiled network file");
    app.add_option("--steps", opt.steps, "Activation steps (default 10)")->check(CLI::PositiveNumber);

    std::string dict, counts, morph, out;
    auto *build = app.add_subcommand("build", "Compile a dictionary into a network");
    build->add_option("--dict", dict, "Dictionary S-expression file");
    build->add_option("--counts", counts, "Corpus counts TSV");
    build->add_option("--morph", morph, "Affix rules TSV (default: built-in English rules)");
    build->add_option("--out", out, "Output network path");

    std::string w1, w2;
    auto *sim = app.add_subcommand("sim", "Similarity sigma(w, w') between two words");
    sim->add_option("word", w1)->required();
    sim->add_option("target", w2)->required();
    sim->add_option("--extra", opt.extra, "Dictionary of words outside the network");

    std::vector<std::string> words;
    auto *pattern = app.add_subcommand("pattern", "Top-K nodes of the activated pattern of words");
    pattern->add_option("words", words)->required();
    pattern->add_option("--top", opt.top_k, "Rows to print");

    std::string text_a, text_b;
    bool from_files = false;
    auto *simtext = app.add_subcommand("simtext", "Similarity between two texts");
    simtext->add_option("text", text_a)->required();
    simtext->add_option("target", text_b)->required();
    simtext->add_flag("--files", from_files, "Arguments are file paths");

    auto *coh = app.add_subcommand("coherence", "Coherence c(X) of a text");
    coh->add_option("text", text_a)->required();
    coh->add_flag("--file", from_files, "Argument is a file path");

    std::string store;
    auto *ret = app.add_subcommand("retrieve", "Rank stored episodes by similarity to a text");
    ret->add_option("text", text_a)->required();
    ret->add_flag("--file", from_files, "Argument is a file path");
    ret->add_option("--store", store, "Episode store (JSON lines)");
    ret->add_option("--top", opt.top_k, "Episodes to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    }

    try {
        if (*build)
            return cmd_build(opt, dict, counts, morph, out);
        if (*sim)
            return cmd_sim(opt, w1, w2);
        if (*pattern)
            return cmd_pattern(opt, words);
        if (*simtext)
            return cmd_simtext(opt, text_a, text_b, from_files);
        if (*coh)
            return cmd_coherence(opt, text_a, from_files);
        if (*ret)
            return cmd_retrieve(opt, text_a, from_files, store);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}
