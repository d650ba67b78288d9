#include "paradigme/significance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "paradigme/errors.hpp"

namespace paradigme {

namespace {

std::vector<std::string> split_tabs(const std::string &line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos)
            break;
        start = tab + 1;
    }
    if (!cols.empty() && !cols.back().empty() && cols.back().back() == '\r')
        cols.back().pop_back();
    return cols;
}

std::int64_t parse_int(const std::string &s, std::size_t lineno, std::size_t column) {
    std::int64_t v = 0;
    const auto *end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end)
        throw ParseError("expected an integer, got '" + s + "'", lineno, column);
    return v;
}

} // namespace

double normalized_information(std::uint64_t count, std::uint64_t total) {
    const double n = static_cast<double>(total);
    const double s = -std::log(static_cast<double>(count) / n) / -std::log(1.0 / n);
    return std::clamp(s, 0.0, 1.0);
}

double SignificanceTable::significance(std::string_view word, std::optional<WordClass> hint) const {
    if (const auto it = counts.find(word); it != counts.end())
        return normalized_information(it->second, total_tokens);
    if (hint) {
        if (const auto it = class_averages.find(*hint); it != class_averages.end())
            return it->second;
    }
    return global_average;
}

std::string SignificanceTable::serialize() const {
    std::ostringstream os;
    os << "#total\t" << total_tokens << '\n';
    for (const auto &[word, count] : counts) {
        os << word << '\t' << count;
        if (const auto it = classes.find(word); it != classes.end())
            os << '\t' << to_string(it->second);
        os << '\n';
    }
    return os.str();
}

SignificanceTable build_significance(std::istream &in,
                                     const std::map<std::string, WordClass, std::less<>> &word_classes) {
    SignificanceTable t;
    std::string line;
    std::size_t lineno = 0;
    bool have_total = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r")
            continue;
        const auto cols = split_tabs(line);
        if (!have_total) {
            if (cols.size() != 2 || cols[0] != "#total")
                throw ParseError("first line must be '#total<TAB>N'", lineno, 1);
            const auto n = parse_int(cols[1], lineno, cols[0].size() + 2);
            if (n < 2)
                throw ParseError("corpus size N must be at least 2", lineno, cols[0].size() + 2);
            t.total_tokens = static_cast<std::uint64_t>(n);
            have_total = true;
            continue;
        }
        if (cols.size() < 2 || cols.size() > 3 || cols[0].empty())
            throw ParseError("expected 'word<TAB>count[<TAB>class]'", lineno, 1);
        const auto c = parse_int(cols[1], lineno, cols[0].size() + 2);
        if (c <= 0)
            throw ParseError("count must be positive", lineno, cols[0].size() + 2);
        if (static_cast<std::uint64_t>(c) > t.total_tokens)
            throw ParseError("count exceeds corpus size", lineno, cols[0].size() + 2);
        std::string word = cols[0];
        std::transform(word.begin(), word.end(), word.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (t.counts.count(word))
            throw ParseError("duplicate word '" + word + "'", lineno, 1);
        t.counts.emplace(word, static_cast<std::uint64_t>(c));
        if (cols.size() == 3 && !cols[2].empty()) {
            const auto wc = parse_word_class(cols[2]);
            if (!wc)
                throw ParseError("unknown word class '" + cols[2] + "'", lineno,
                                 cols[0].size() + cols[1].size() + 3);
            t.classes.emplace(word, *wc);
        } else if (const auto it = word_classes.find(word); it != word_classes.end()) {
            t.classes.emplace(word, it->second);
        }
    }
    if (!have_total)
        throw ParseError("missing '#total' header", lineno + 1, 1);

    std::map<WordClass, std::pair<double, std::size_t>> acc;
    double sum = 0.0;
    for (const auto &[word, count] : t.counts) {
        const double s = normalized_information(count, t.total_tokens);
        sum += s;
        if (const auto it = t.classes.find(word); it != t.classes.end()) {
            auto &[class_sum, n] = acc[it->second];
            class_sum += s;
            ++n;
        }
    }
    for (const auto &[wc, sn] : acc)
        t.class_averages[wc] = sn.first / static_cast<double>(sn.second);
    t.global_average = t.counts.empty() ? 0.0 : sum / static_cast<double>(t.counts.size());
    return t;
}

SignificanceTable load_significance(const std::string &path,
                                    const std::map<std::string, WordClass, std::less<>> &word_classes) {
    std::ifstream in(path);
    if (!in)
        throw IoError("file not found: " + path);
    return build_significance(in, word_classes);
}

} // namespace paradigme
