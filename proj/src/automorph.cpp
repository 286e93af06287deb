#include "gfa/automorph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gfa {

LabelVector cyclic_shift(const LabelVector& c) {
    if (c.size() < 1) throw std::invalid_argument("empty label vector");
    std::vector<int> v = c.values();
    const int first = v[0];
    for (size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1];
    v.back() = first;
    return LabelVector(std::move(v));
}

LabelVector swap_labels(const LabelVector& c, int i, int j) {
    if (i < 1 || i > c.size() || j < 1 || j > c.size())
        throw std::out_of_range("swap position out of range");
    std::vector<int> v = c.values();
    std::swap(v[i - 1], v[j - 1]);
    return LabelVector(std::move(v));
}

LabelVector reversed(const LabelVector& c) {
    std::vector<int> v = c.values();
    std::reverse(v.begin(), v.end());
    return LabelVector(std::move(v));
}

AdjacencyField mirror(const AdjacencyField& f, Axis) {
    return apply_relabeling(f, reversed(f.labels));
}

namespace {

// g applied to v: position i takes the value at g's target position.
LabelVector act(const LabelVector& g, const LabelVector& v) {
    std::vector<int> out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = v.at(g.at(i) - 1);
    return LabelVector(std::move(out));
}

struct NamedGenerator {
    std::string name;
    LabelVector mapping;
};

}  // namespace

std::vector<GroupElement> generate_group(int n, const GeneratorSet& generators,
                                         int cap) {
    if (n < 1) throw std::invalid_argument("group degree must be >= 1");
    if (n > 6) throw std::invalid_argument("group closure is limited to n <= 6");
    std::vector<NamedGenerator> gens;
    if (generators.cyclic) gens.push_back({"cyclic", cyclic_shift(LabelVector::identity(n))});
    if (generators.mirror) gens.push_back({"mirror", reversed(LabelVector::identity(n))});
    if (generators.adjacent_swaps)
        for (int i = 1; i < n; ++i) {
            std::ostringstream name;
            name << "swap(" << i << ',' << i + 1 << ')';
            gens.push_back({name.str(), swap_labels(LabelVector::identity(n), i, i + 1)});
        }
    if (gens.empty()) throw std::invalid_argument("empty generator set");

    std::vector<GroupElement> result;
    std::map<LabelVector, bool> seen;
    std::vector<GroupElement> frontier{{LabelVector::identity(n), {}}};
    seen[frontier[0].mapping] = true;
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end(),
                  [](const GroupElement& a, const GroupElement& b) {
                      return a.word < b.word;
                  });
        std::vector<GroupElement> next;
        for (const auto& elem : frontier) {
            result.push_back(elem);
            if (static_cast<int>(result.size()) + static_cast<int>(next.size()) >
                cap)
                throw std::runtime_error("group closure exceeded cap");
            for (const auto& gen : gens) {
                GroupElement cand;
                cand.mapping = act(gen.mapping, elem.mapping);
                if (seen[cand.mapping]) continue;
                seen[cand.mapping] = true;
                cand.word = elem.word;
                cand.word.push_back(gen.name);
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
    }
    return result;
}

AdjacencyField canonical_form(const AdjacencyField& f,
                              const std::vector<GroupElement>& group) {
    if (group.empty()) throw std::invalid_argument("empty group");
    bool have = false;
    AdjacencyField best;
    for (const auto& g : group) {
        if (g.mapping.size() != f.n)
            throw std::invalid_argument("group degree does not match field");
        std::vector<int> labels(f.n);
        for (int i = 0; i < f.n; ++i) labels[i] = f.labels.at(g.mapping.at(i) - 1);
        auto cand = apply_relabeling(f, LabelVector(std::move(labels)));
        if (!have || cand.entries < best.entries ||
            (cand.entries == best.entries && cand.labels < best.labels)) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

std::vector<GroupElement> symmetric_group(int n) {
    if (n == 1) {
        GeneratorSet gens;
        gens.cyclic = true;
        return generate_group(1, gens);
    }
    GeneratorSet gens;
    gens.adjacent_swaps = true;
    return generate_group(n, gens);
}

std::string cycle_notation(const LabelVector& mapping) {
    const int n = mapping.size();
    std::vector<bool> seen(n, false);
    std::ostringstream out;
    bool any = false;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || mapping.at(start) == start + 1) {
            seen[start] = true;
            continue;
        }
        any = true;
        out << '(';
        int cur = start;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = true;
            out << (first ? "" : " ") << cur + 1;
            first = false;
            cur = mapping.at(cur) - 1;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

}  // namespace gfa
