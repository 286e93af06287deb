#include "gfa/grammar.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gfa {

std::vector<int> canonical_start_vertices(const AdjacencyField& f) {
    auto classes = classify_vertices(f);
    std::vector<int> endpoints, polar, all;
    for (const auto& c : classes) {
        all.push_back(c.vertex);
        if (c.is_endpoint) endpoints.push_back(c.vertex);
        if (c.is_polar) polar.push_back(c.vertex);
    }
    if (!endpoints.empty()) return endpoints;
    if (!polar.empty()) return polar;
    return all;
}

namespace {

// Visit order from a start position: BFS on the symmetrized matrix,
// neighbors in ascending label order, remaining components picked up by
// smallest unvisited label.
std::vector<int> bfs_order(const AdjacencyField& f, int start) {
    std::vector<int> order;
    std::vector<bool> visited(f.n, false);
    std::deque<int> queue;
    auto by_label = [&](int a, int b) { return f.labels.at(a) < f.labels.at(b); };
    int next_seed = start;
    while (static_cast<int>(order.size()) < f.n) {
        if (queue.empty()) {
            if (next_seed < 0 || visited[next_seed]) {
                next_seed = -1;
                for (int v = 0; v < f.n; ++v)
                    if (!visited[v] && (next_seed < 0 || by_label(v, next_seed)))
                        next_seed = v;
            }
            queue.push_back(next_seed);
            visited[next_seed] = true;
            next_seed = -1;
        }
        const int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        std::vector<int> neighbors;
        for (int u = 0; u < f.n; ++u)
            if (!visited[u] && (f.entries[v][u] != 0 || f.entries[u][v] != 0))
                neighbors.push_back(u);
        std::sort(neighbors.begin(), neighbors.end(), by_label);
        for (int u : neighbors) {
            visited[u] = true;
            queue.push_back(u);
        }
    }
    return order;
}

std::string render(const AdjacencyField& f, const std::vector<int>& order) {
    std::ostringstream out;
    out << f.n << ' ' << f.ring.modulus << " /";
    for (int i = 0; i < f.n; ++i) out << ' ' << i + 1;
    for (int i = 0; i < f.n; ++i) {
        out << " /";
        for (int j = 0; j < f.n; ++j) out << ' ' << f.entries[order[i]][order[j]];
    }
    for (int i = 0; i < f.n; ++i) {
        auto it = f.vertex_attrs.find(order[i]);
        if (it == f.vertex_attrs.end()) continue;
        for (const auto& [k, v] : it->second)
            out << " / @ " << i + 1 << ' ' << k << '=' << v;
    }
    return out.str();
}

std::vector<int> canonical_order(const AdjacencyField& f) {
    if (f.n > 8)
        throw std::invalid_argument("canonical labeling is limited to n <= 8");
    std::vector<int> best_order;
    std::string best_string;
    int best_start_label = 0;
    for (int start : canonical_start_vertices(f)) {
        auto order = bfs_order(f, start);
        auto rendered = render(f, order);
        const int start_label = f.labels.at(start);
        if (best_order.empty() || rendered < best_string ||
            (rendered == best_string && start_label < best_start_label)) {
            best_order = std::move(order);
            best_string = std::move(rendered);
            best_start_label = start_label;
        }
    }
    return best_order;
}

}  // namespace

LabelVector canonical_label(const AdjacencyField& f) {
    auto order = canonical_order(f);
    std::vector<int> labels(f.n);
    for (int i = 0; i < f.n; ++i) labels[i] = f.labels.at(order[i]);
    return LabelVector(std::move(labels));
}

GraphString serialize(const AdjacencyField& f) {
    return render(f, canonical_order(f));
}

GraphString serialize(const std::optional<AdjacencyField>& f) {
    if (!f) return kNullGraphToken;
    return serialize(*f);
}

std::optional<AdjacencyField> parse(const GraphString& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == kNullGraphToken) return std::nullopt;
    return read_field_text(s);
}

}  // namespace gfa
