#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotsurgery/laurent.hpp"

namespace knotsurgery {

/// Torus knot T(p, q) with gcd(p, q) = 1, stored with p <= q.
class TorusKnotSpec {
public:
    TorusKnotSpec(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_unknot() const { return p_ == 1; }

    friend bool operator==(const TorusKnotSpec&, const TorusKnotSpec&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// Knot expression tree: unknot, torus knots, mirrors and connected sums.
class KnotExpr {
public:
    struct Unknot {};
    struct Torus {
        TorusKnotSpec spec;
    };
    struct Mirror {
        std::shared_ptr<const KnotExpr> inner;
    };
    struct Sum {
        std::shared_ptr<const KnotExpr> left;
        std::shared_ptr<const KnotExpr> right;
    };
    using Node = std::variant<Unknot, Torus, Mirror, Sum>;

    static KnotExpr unknot();
    static KnotExpr torus(std::int64_t p, std::int64_t q);
    static KnotExpr mirror(KnotExpr inner);
    static KnotExpr sum(KnotExpr left, KnotExpr right);

    const Node& node() const { return node_; }

private:
    explicit KnotExpr(Node node)
        : node_(std::move(node))
    {
    }

    Node node_;
};

/// Grammar: `unknot`, `torus(p,q)`, `mirror(E)`, `sum(E,E)`.
KnotExpr parse_knot_expr(std::string_view text);
std::string to_string(const KnotExpr& k);

/// Symmetrized Alexander polynomial of T(p, q) in `var`, from the closed
/// formula (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
LaurentPoly alexander_torus(const TorusKnotSpec& k, const std::string& var = "t");

/// Alexander polynomial of an expression; connected sums multiply, mirrors
/// are invisible. Always returned in symmetrized form.
LaurentPoly alexander_expr(const KnotExpr& k, const std::string& var = "t");

/// Seifert genus of the fiber surface, (p - 1)(q - 1) / 2.
std::int64_t genus_torus(const TorusKnotSpec& k);

/// A letter of a word in a free group: generator index and exponent +-1.
struct Letter {
    std::size_t generator;
    int sign;

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

/// <x, y | x^p y^-q> for T(p, q); <x | > for the unknot.
GroupPresentation torus_knot_presentation(const TorusKnotSpec& k);

/// Image of each generator in the abelianization Z = <t>, as a power of t.
using Abelianization = std::map<std::string, std::int64_t, std::less<>>;

/// Standard abelianization of the torus-knot group: x -> t^q, y -> t^p.
Abelianization torus_knot_abelianization(const TorusKnotSpec& k);

/// Fox derivative of `w` with respect to generator `j`, pushed through the
/// abelianization into single-variable Laurent polynomials in `var`.
LaurentPoly fox_derivative_image(const Word& w, std::size_t j, const std::vector<std::int64_t>& images,
                                 const std::string& var = "t");

/// Alexander polynomial from Fox calculus on a 1- or 2-generator
/// presentation with at most one relator. Independent of the closed formula.
LaurentPoly alexander_fox_oracle(const GroupPresentation& g, const Abelianization& abelianization,
                                 const std::string& var = "t");

} // namespace knotsurgery
