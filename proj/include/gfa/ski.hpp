#pragma once

#include <memory>
#include <optional>
#include <string>

#include "gfa/field.hpp"

namespace gfa {

struct SkiTerm;
using TermPtr = std::shared_ptr<const SkiTerm>;

/// S/K/I combinator application tree.
struct SkiTerm {
    enum class Kind { S, K, I, App };
    Kind kind;
    TermPtr left;   // App only
    TermPtr right;  // App only
};

TermPtr ski_s();
TermPtr ski_k();
TermPtr ski_i();
TermPtr ski_app(TermPtr left, TermPtr right);

bool term_equal(const TermPtr& a, const TermPtr& b);
int term_size(const TermPtr& t);

/// Parenthesized prefix text, e.g. "((S K) K)".
TermPtr parse_term(const std::string& text);
std::string print_term(const TermPtr& t);

struct ReduceStepResult {
    TermPtr term;
    bool reduced = false;
};

/// One leftmost-outermost step: I x -> x; K x y -> x; S x y z -> x z (y z).
ReduceStepResult reduce_step(const TermPtr& t);

struct NormalizeResult {
    TermPtr term;
    int steps = 0;
    bool normalized = false;  // false means fuel ran out
};

NormalizeResult normalize(const TermPtr& t, int fuel = 10000);

/// Application tree as a directed field: vertices in preorder, edges
/// parent -> child, leaf kinds and child sides carried as vertex
/// attributes. decode(encode(t)) == t.
AdjacencyField encode_term_as_field(const TermPtr& t, int max_vertices = 64);
TermPtr decode_field_as_term(const AdjacencyField& f);

}  // namespace gfa
