#pragma once

// Dense-matrix spreading activation, written independently of the CSR kernel and
// the serial reference. Only used in tests.

#include <algorithm>
#include <vector>

#include "paradigme/network.hpp"

namespace paradigme::testing {

class DenseOracle {
public:
    explicit DenseOracle(const Network &net) : n_(net.size()) {
        rows_.resize(n_);
        weights_.resize(n_);
        back_.assign(n_, std::vector<double>(n_, 0.0));
        for (std::size_t i = 0; i < n_; ++i) {
            const Node &node = net.nodes()[i];
            for (const Subreferant &s : node.subreferants) {
                std::vector<double> row(n_, 0.0);
                for (const Link &l : s.links)
                    row[l.target] += l.thickness;
                rows_[i].push_back(std::move(row));
                weights_[i].push_back(s.thickness);
            }
            for (const Link &l : node.refere)
                back_[i][l.target] += l.thickness;
        }
    }

    std::vector<double> step(const std::vector<double> &a, const std::vector<double> &e) const {
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<double> s(rows_[i].size(), 0.0);
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                for (std::size_t col = 0; col < n_; ++col)
                    s[j] += rows_[i][j][col] * a[col];
            std::size_t best = 0;
            for (std::size_t j = 1; j < s.size(); ++j)
                if (weights_[i][j] * s[j] > weights_[i][best] * s[best])
                    best = j;
            const double r = s.empty() ? 0.0 : s[best];
            double r_back = 0.0;
            for (std::size_t col = 0; col < n_; ++col)
                r_back += back_[i][col] * a[col];
            out[i] = std::min(1.0, std::max(0.0, 0.5 * (r + r_back) + e[i]));
        }
        return out;
    }

    /// Patterns for T = 0..steps starting from zeros.
    std::vector<std::vector<double>> trace(const std::vector<double> &e, std::size_t steps) const {
        std::vector<std::vector<double>> out{std::vector<double>(n_, 0.0)};
        for (std::size_t t = 0; t < steps; ++t)
            out.push_back(step(out.back(), e));
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::vector<double>>> rows_;
    std::vector<std::vector<double>> weights_;
    std::vector<std::vector<double>> back_;
};

} // namespace paradigme::testing
