#pragma once

#include <fstream>
#include <string>

#include "paradigme/dictionary.hpp"
#include "paradigme/model.hpp"

#ifndef PARADIGME_TEST_DATA
#error "PARADIGME_TEST_DATA must point at tests/data"
#endif

namespace paradigme::testing {

inline std::string data_path(const std::string &name) { return std::string(PARADIGME_TEST_DATA) + "/" + name; }

/// The bundled 30-entry closed dictionary compiled with its counts and morph rules.
inline const Model &fixture_model() {
    static const Model model = [] {
        std::ifstream counts(data_path("counts.tsv"));
        return compile_model(load_dictionary(data_path("fixture.dict")), counts,
                             MorphTable::load(data_path("morph.tsv")));
    }();
    return model;
}

inline const std::vector<DictEntry> &fixture_extra() {
    static const auto extra = load_dictionary(data_path("extra.dict"));
    return extra;
}

} // namespace paradigme::testing
