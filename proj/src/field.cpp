#include "gfa/field.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gfa {

bool RingSpec::is_prime() const {
    if (modulus < 2) return false;
    for (int d = 2; d * d <= modulus; ++d)
        if (modulus % d == 0) return false;
    return true;
}

LabelVector::LabelVector(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    std::vector<bool> seen(n, false);
    for (int v : labels_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("labels are not a permutation of {1..n}");
        seen[v - 1] = true;
    }
}

LabelVector LabelVector::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return LabelVector(std::move(v));
}

int LabelVector::position_of(int label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw std::out_of_range("label not present");
}

bool AdjacencyField::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (entries[i][j] != entries[j][i]) return false;
    return true;
}

bool AdjacencyField::same_graph(const AdjacencyField& other) const {
    return n == other.n && ring == other.ring && entries == other.entries;
}

AdjacencyField make_field(int n, RingSpec ring,
                          std::vector<std::vector<int>> entries,
                          LabelVector labels, VertexAttrs vertex_attrs) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (ring.modulus < 2) throw std::invalid_argument("ring modulus must be >= 2");
    if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("entry matrix row count does not match n");
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("entry matrix is not square");
        for (int v : row)
            if (v < 0 || v >= ring.modulus)
                throw std::invalid_argument("entry outside ring range");
    }
    if (labels.size() != n)
        throw std::invalid_argument("label vector length does not match n");
    for (const auto& [v, _] : vertex_attrs)
        if (v < 0 || v >= n)
            throw std::invalid_argument("attribute vertex out of range");
    return AdjacencyField{n, ring, std::move(entries), std::move(labels),
                          std::move(vertex_attrs)};
}

static int mod_inverse(int a, int m) {
    // m prime, a nonzero: Fermat.
    long long result = 1, base = a % m;
    for (int e = m - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
    }
    return static_cast<int>(result);
}

AdjacencyField entrywise_op(const AdjacencyField& a, const AdjacencyField& b,
                            RingOp op) {
    if (a.n != b.n) throw std::invalid_argument("field dimensions differ");
    if (!(a.ring == b.ring)) throw std::invalid_argument("field rings differ");
    const int m = a.ring.modulus;
    if (op == RingOp::Div && !a.ring.is_prime())
        throw std::invalid_argument("division requires a prime modulus");
    auto result = a;
    for (int i = 0; i < a.n; ++i) {
        for (int j = 0; j < a.n; ++j) {
            const int x = a.entries[i][j];
            const int y = b.entries[i][j];
            switch (op) {
                case RingOp::Add: result.entries[i][j] = (x + y) % m; break;
                case RingOp::Sub: result.entries[i][j] = ((x - y) % m + m) % m; break;
                case RingOp::Div:
                    if (y == 0) throw std::invalid_argument("division by a zero entry");
                    result.entries[i][j] = static_cast<int>(
                        static_cast<long long>(x) * mod_inverse(y, m) % m);
                    break;
            }
        }
    }
    return result;
}

AdjacencyField apply_relabeling(const AdjacencyField& f,
                                const LabelVector& new_labels) {
    if (new_labels.size() != f.n)
        throw std::invalid_argument("label vector length does not match field");
    // perm[i]: old position of the vertex that moves to position i.
    std::vector<int> perm(f.n);
    for (int i = 0; i < f.n; ++i)
        perm[i] = f.labels.position_of(new_labels.at(i));
    AdjacencyField out;
    out.n = f.n;
    out.ring = f.ring;
    out.labels = new_labels;
    out.entries.assign(f.n, std::vector<int>(f.n, 0));
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            out.entries[i][j] = f.entries[perm[i]][perm[j]];
    for (int i = 0; i < f.n; ++i) {
        auto it = f.vertex_attrs.find(perm[i]);
        if (it != f.vertex_attrs.end()) out.vertex_attrs[i] = it->second;
    }
    return out;
}

std::vector<VertexClass> classify_vertices(const AdjacencyField& f) {
    std::vector<int> degree(f.n, 0);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            if (f.entries[i][j] != 0 || f.entries[j][i] != 0) ++degree[i];
    const bool regular =
        std::all_of(degree.begin(), degree.end(),
                    [&](int d) { return d == degree[0]; });
    std::vector<VertexClass> out(f.n);
    for (int i = 0; i < f.n; ++i) {
        out[i].vertex = i;
        out[i].degree = degree[i];
        out[i].is_endpoint = degree[i] == 1;
        out[i].is_polar =
            !regular && std::any_of(degree.begin(), degree.end(),
                                    [&](int d) { return d != degree[i]; });
    }
    return out;
}

bool is_isomorphic(const AdjacencyField& a, const AdjacencyField& b) {
    if (a.n != b.n || !(a.ring == b.ring)) return false;
    if (a.n > 8)
        throw std::invalid_argument("isomorphism search is limited to n <= 8");
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; match && i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                if (a.entries[perm[i]][perm[j]] != b.entries[i][j]) {
                    match = false;
                    break;
                }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    // '/' and newline both end a line.
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> current;
    std::string word;
    char c;
    auto flush_word = [&] {
        if (!word.empty()) {
            current.push_back(word);
            word.clear();
        }
    };
    auto flush_line = [&] {
        flush_word();
        if (!current.empty()) {
            lines.push_back(current);
            current.clear();
        }
    };
    while (in.get(c)) {
        if (c == '\n' || c == '/')
            flush_line();
        else if (std::isspace(static_cast<unsigned char>(c)))
            flush_word();
        else
            word += c;
    }
    flush_line();
    return lines;
}

int parse_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed " + what + " token '" + tok + "'");
    }
}

}  // namespace

AdjacencyField read_field(std::istream& in) {
    auto lines = tokenize_lines(in);
    if (lines.empty()) throw std::invalid_argument("empty field description");
    if (lines[0].size() != 2)
        throw std::invalid_argument("header line must be 'n m'");
    const int n = parse_int(lines[0][0], "vertex count");
    const int m = parse_int(lines[0][1], "modulus");
    if (static_cast<int>(lines.size()) < n + 2)
        throw std::invalid_argument("truncated field description");
    std::vector<int> labels;
    for (const auto& tok : lines[1]) labels.push_back(parse_int(tok, "label"));
    std::vector<std::vector<int>> entries;
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        for (const auto& tok : lines[2 + i]) row.push_back(parse_int(tok, "entry"));
        entries.push_back(std::move(row));
    }
    VertexAttrs attrs;
    for (size_t li = 2 + n; li < lines.size(); ++li) {
        const auto& line = lines[li];
        if (line.size() != 3 || line[0] != "@")
            throw std::invalid_argument("malformed attribute line");
        const int vertex = parse_int(line[1], "attribute vertex") - 1;
        const auto eq = line[2].find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("attribute must be key=value");
        attrs[vertex][line[2].substr(0, eq)] = line[2].substr(eq + 1);
    }
    return make_field(n, RingSpec{m}, std::move(entries),
                      LabelVector(std::move(labels)), std::move(attrs));
}

AdjacencyField read_field_text(const std::string& text) {
    std::istringstream in(text);
    return read_field(in);
}

void write_field(std::ostream& out, const AdjacencyField& f) {
    out << f.n << ' ' << f.ring.modulus << '\n';
    for (int i = 0; i < f.n; ++i) out << (i ? " " : "") << f.labels.at(i);
    out << '\n';
    for (int i = 0; i < f.n; ++i) {
        for (int j = 0; j < f.n; ++j) out << (j ? " " : "") << f.entries[i][j];
        out << '\n';
    }
    for (const auto& [v, kv] : f.vertex_attrs)
        for (const auto& [k, val] : kv)
            out << "@ " << v + 1 << ' ' << k << '=' << val << '\n';
}

std::string write_field_text(const AdjacencyField& f) {
    std::ostringstream out;
    write_field(out, f);
    return out.str();
}

AdjacencyField load_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field file: " + path);
    return read_field(in);
}

}  // namespace gfa
