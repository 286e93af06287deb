#pragma once

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gfa/field.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("GFA_FIXTURES");
    return std::string(dir ? dir : "fixtures") + "/" + name;
}

inline gfa::AdjacencyField load_fixture(const std::string& name) {
    return gfa::load_field_file(fixture_path(name));
}

inline std::string slurp_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline gfa::LabelVector random_labels(std::mt19937_64& rng, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(v[i], v[rng() % (i + 1)]);
    return gfa::LabelVector(std::move(v));
}

inline gfa::AdjacencyField random_field(std::mt19937_64& rng, int n, int m = 2,
                                        bool random_label_order = false) {
    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    for (auto& row : entries)
        for (auto& v : row) v = static_cast<int>(rng() % m);
    auto labels = random_label_order ? random_labels(rng, n)
                                     : gfa::LabelVector::identity(n);
    return gfa::make_field(n, gfa::RingSpec{m}, std::move(entries),
                           std::move(labels));
}

}  // namespace testutil
