#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gfa {

/// Finite ring Z_m the matrix entries live in. Division requires m prime.
struct RingSpec {
    int modulus = 2;

    bool is_prime() const;
    bool operator==(const RingSpec&) const = default;
};

/// A permutation of {1..n}, 1-based values stored at 0-based positions.
class LabelVector {
public:
    LabelVector() = default;
    explicit LabelVector(std::vector<int> labels);
    static LabelVector identity(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    int at(int pos) const { return labels_.at(pos); }
    int position_of(int label) const;
    const std::vector<int>& values() const { return labels_; }

    bool operator==(const LabelVector&) const = default;
    auto operator<=>(const LabelVector&) const = default;

private:
    std::vector<int> labels_;
};

/// Per-vertex key/value annotations, keyed by vertex position.
using VertexAttrs = std::map<int, std::map<std::string, std::string>>;

/// Square matrix over Z_m plus a label vector. The labels are permanent
/// vertex names; relabeling reorders storage without renaming.
struct AdjacencyField {
    int n = 0;
    RingSpec ring;
    std::vector<std::vector<int>> entries;
    LabelVector labels;
    VertexAttrs vertex_attrs;

    bool is_symmetric() const;
    bool same_graph(const AdjacencyField& other) const;  // entries + n + ring
};

struct VertexClass {
    int vertex = 0;  // 0-based position
    int degree = 0;
    bool is_endpoint = false;
    bool is_polar = false;
};

enum class RingOp { Add, Sub, Div };

AdjacencyField make_field(int n, RingSpec ring,
                          std::vector<std::vector<int>> entries,
                          LabelVector labels,
                          VertexAttrs vertex_attrs = {});

AdjacencyField entrywise_op(const AdjacencyField& a, const AdjacencyField& b,
                            RingOp op);

/// Reorders rows/columns so the vertex named new_labels[i] sits at position i.
AdjacencyField apply_relabeling(const AdjacencyField& f,
                                const LabelVector& new_labels);

/// Degrees are taken on the symmetrized matrix (entry or transpose nonzero).
std::vector<VertexClass> classify_vertices(const AdjacencyField& f);

/// Exhaustive permutation search; guarded at n <= 8.
bool is_isomorphic(const AdjacencyField& a, const AdjacencyField& b);

/// Fixture text format: "n m", labels line, n entry rows, optional
/// "@ vertex key=value" lines. '/' and newline are interchangeable
/// separators between lines.
AdjacencyField read_field(std::istream& in);
AdjacencyField read_field_text(const std::string& text);
void write_field(std::ostream& out, const AdjacencyField& f);
std::string write_field_text(const AdjacencyField& f);
AdjacencyField load_field_file(const std::string& path);

}  // namespace gfa
