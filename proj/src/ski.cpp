#include "gfa/ski.hpp"

#include <stdexcept>
#include <vector>

namespace gfa {

namespace {

TermPtr leaf(SkiTerm::Kind k) {
    // The three leaves are shared singletons.
    static const TermPtr s = std::make_shared<SkiTerm>(SkiTerm{SkiTerm::Kind::S});
    static const TermPtr kk = std::make_shared<SkiTerm>(SkiTerm{SkiTerm::Kind::K});
    static const TermPtr i = std::make_shared<SkiTerm>(SkiTerm{SkiTerm::Kind::I});
    switch (k) {
        case SkiTerm::Kind::S: return s;
        case SkiTerm::Kind::K: return kk;
        default: return i;
    }
}

}  // namespace

TermPtr ski_s() { return leaf(SkiTerm::Kind::S); }
TermPtr ski_k() { return leaf(SkiTerm::Kind::K); }
TermPtr ski_i() { return leaf(SkiTerm::Kind::I); }

TermPtr ski_app(TermPtr left, TermPtr right) {
    if (!left || !right) throw std::invalid_argument("null subterm");
    return std::make_shared<SkiTerm>(
        SkiTerm{SkiTerm::Kind::App, std::move(left), std::move(right)});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind != SkiTerm::Kind::App) return true;
    return term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

int term_size(const TermPtr& t) {
    if (!t) return 0;
    if (t->kind != SkiTerm::Kind::App) return 1;
    return 1 + term_size(t->left) + term_size(t->right);
}

namespace {

TermPtr parse_at(const std::string& text, size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of term");
    const char c = text[pos];
    if (c == 'S' || c == 's') { ++pos; return ski_s(); }
    if (c == 'K' || c == 'k') { ++pos; return ski_k(); }
    if (c == 'I' || c == 'i') { ++pos; return ski_i(); }
    if (c == '(') {
        ++pos;
        auto left = parse_at(text, pos);
        auto right = parse_at(text, pos);
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("expected ')' at position " +
                                        std::to_string(pos));
        ++pos;
        return ski_app(std::move(left), std::move(right));
    }
    throw std::invalid_argument(std::string("unexpected character '") + c +
                                "' at position " + std::to_string(pos));
}

}  // namespace

TermPtr parse_term(const std::string& text) {
    size_t pos = 0;
    auto t = parse_at(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw std::invalid_argument("trailing input after term");
    return t;
}

std::string print_term(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->kind) {
        case SkiTerm::Kind::S: return "S";
        case SkiTerm::Kind::K: return "K";
        case SkiTerm::Kind::I: return "I";
        case SkiTerm::Kind::App:
            return "(" + print_term(t->left) + " " + print_term(t->right) + ")";
    }
    return "?";
}

namespace {

// Unrolls the spine: t == head applied to args[0], args[1], ...
void spine(const TermPtr& t, TermPtr& head, std::vector<TermPtr>& args) {
    if (t->kind == SkiTerm::Kind::App) {
        spine(t->left, head, args);
        args.push_back(t->right);
    } else {
        head = t;
    }
}

TermPtr rebuild(TermPtr head, const std::vector<TermPtr>& args, size_t from) {
    TermPtr out = std::move(head);
    for (size_t i = from; i < args.size(); ++i) out = ski_app(out, args[i]);
    return out;
}

}  // namespace

ReduceStepResult reduce_step(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    TermPtr head;
    std::vector<TermPtr> args;
    spine(t, head, args);
    if (head->kind == SkiTerm::Kind::I && args.size() >= 1)
        return {rebuild(args[0], args, 1), true};
    if (head->kind == SkiTerm::Kind::K && args.size() >= 2)
        return {rebuild(args[0], args, 2), true};
    if (head->kind == SkiTerm::Kind::S && args.size() >= 3) {
        auto redex = ski_app(ski_app(args[0], args[2]), ski_app(args[1], args[2]));
        return {rebuild(std::move(redex), args, 3), true};
    }
    // Head is stuck; reduce the leftmost reducible argument.
    for (size_t i = 0; i < args.size(); ++i) {
        auto sub = reduce_step(args[i]);
        if (sub.reduced) {
            auto copy = args;
            copy[i] = sub.term;
            return {rebuild(head, copy, 0), true};
        }
    }
    return {t, false};
}

NormalizeResult normalize(const TermPtr& t, int fuel) {
    if (fuel < 0) throw std::invalid_argument("fuel must be >= 0");
    NormalizeResult result{t, 0, false};
    while (result.steps <= fuel) {
        auto step = reduce_step(result.term);
        if (!step.reduced) {
            result.normalized = true;
            return result;
        }
        if (result.steps == fuel) return result;  // out of fuel
        result.term = step.term;
        ++result.steps;
    }
    return result;
}

namespace {

int encode_at(const TermPtr& t, std::vector<std::pair<int, int>>& edges,
              VertexAttrs& attrs, int& next) {
    const int id = next++;
    switch (t->kind) {
        case SkiTerm::Kind::S: attrs[id]["kind"] = "S"; break;
        case SkiTerm::Kind::K: attrs[id]["kind"] = "K"; break;
        case SkiTerm::Kind::I: attrs[id]["kind"] = "I"; break;
        case SkiTerm::Kind::App: {
            attrs[id]["kind"] = "app";
            const int l = encode_at(t->left, edges, attrs, next);
            attrs[l]["side"] = "l";
            edges.emplace_back(id, l);
            const int r = encode_at(t->right, edges, attrs, next);
            attrs[r]["side"] = "r";
            edges.emplace_back(id, r);
            break;
        }
    }
    return id;
}

}  // namespace

AdjacencyField encode_term_as_field(const TermPtr& t, int max_vertices) {
    const int n = term_size(t);
    if (n > max_vertices) throw std::invalid_argument("term too large to encode");
    std::vector<std::pair<int, int>> edges;
    VertexAttrs attrs;
    int next = 0;
    encode_at(t, edges, attrs, next);
    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    for (auto [from, to] : edges) entries[from][to] = 1;
    return make_field(n, RingSpec{2}, std::move(entries),
                      LabelVector::identity(n), std::move(attrs));
}

namespace {

TermPtr decode_at(const AdjacencyField& f, int vertex) {
    auto it = f.vertex_attrs.find(vertex);
    if (it == f.vertex_attrs.end() || !it->second.count("kind"))
        throw std::invalid_argument("vertex missing kind attribute");
    const std::string& kind = it->second.at("kind");
    if (kind == "S") return ski_s();
    if (kind == "K") return ski_k();
    if (kind == "I") return ski_i();
    if (kind != "app") throw std::invalid_argument("unknown kind: " + kind);
    int left = -1, right = -1;
    for (int u = 0; u < f.n; ++u) {
        if (f.entries[vertex][u] == 0) continue;
        auto uit = f.vertex_attrs.find(u);
        if (uit == f.vertex_attrs.end() || !uit->second.count("side"))
            throw std::invalid_argument("child missing side attribute");
        (uit->second.at("side") == "l" ? left : right) = u;
    }
    if (left < 0 || right < 0)
        throw std::invalid_argument("application vertex needs two children");
    return ski_app(decode_at(f, left), decode_at(f, right));
}

}  // namespace

TermPtr decode_field_as_term(const AdjacencyField& f) {
    std::vector<int> indegree(f.n, 0);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            if (f.entries[i][j] != 0) ++indegree[j];
    int root = -1;
    for (int v = 0; v < f.n; ++v)
        if (indegree[v] == 0) {
            if (root >= 0) throw std::invalid_argument("field has multiple roots");
            root = v;
        }
    if (root < 0) throw std::invalid_argument("field has no root");
    auto term = decode_at(f, root);
    if (term_size(term) != f.n)
        throw std::invalid_argument("field is not a single tree");
    return term;
}

}  // namespace gfa
