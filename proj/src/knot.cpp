#include "knotsurgery/knot.hpp"

#include <cctype>
#include <numeric>

namespace knotsurgery {

TorusKnotSpec::TorusKnotSpec(std::int64_t p, std::int64_t q)
{
    if (p < 1 || q < 1)
        throw InvalidArgument("torus knot parameters must be positive");
    if (std::gcd(p, q) != 1)
        throw InvalidArgument("torus(" + std::to_string(p) + "," + std::to_string(q)
                              + ") is a link, not a knot: parameters must be coprime");
    p_ = std::min(p, q);
    q_ = std::max(p, q);
}

KnotExpr KnotExpr::unknot() { return KnotExpr(Unknot{}); }

KnotExpr KnotExpr::torus(std::int64_t p, std::int64_t q) { return KnotExpr(Torus{TorusKnotSpec(p, q)}); }

KnotExpr KnotExpr::mirror(KnotExpr inner)
{
    return KnotExpr(Mirror{std::make_shared<const KnotExpr>(std::move(inner))});
}

KnotExpr KnotExpr::sum(KnotExpr left, KnotExpr right)
{
    return KnotExpr(Sum{std::make_shared<const KnotExpr>(std::move(left)),
                        std::make_shared<const KnotExpr>(std::move(right))});
}

namespace {

class KnotParser {
public:
    explicit KnotParser(std::string_view text)
        : text_(text)
    {
    }

    KnotExpr parse()
    {
        KnotExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return e;
    }

private:
    KnotExpr expr()
    {
        const std::string kw = keyword();
        if (kw == "unknot")
            return KnotExpr::unknot();
        if (kw == "torus") {
            expect('(');
            const auto p = integer();
            expect(',');
            const auto q = integer();
            expect(')');
            try {
                return KnotExpr::torus(p, q);
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what());
            }
        }
        if (kw == "mirror") {
            expect('(');
            KnotExpr inner = expr();
            expect(')');
            return KnotExpr::mirror(std::move(inner));
        }
        if (kw == "sum") {
            expect('(');
            KnotExpr left = expr();
            expect(',');
            KnotExpr right = expr();
            expect(')');
            return KnotExpr::sum(std::move(left), std::move(right));
        }
        fail("unknown knot constructor '" + kw + "'");
    }

    std::string keyword()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected unknot, torus, mirror or sum");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t integer()
    {
        skip_ws();
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            try {
                v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
            } catch (const ExponentOverflow&) {
                fail("integer out of range");
            }
            ++pos_;
        }
        if (start == pos_)
            fail("expected a positive integer");
        return v;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("knot expression parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

LaurentPoly binomial_minus_one(const std::string& var, Exponent e)
{
    return LaurentPoly::univariate(var, {{e, 1}, {0, -1}});
}

} // namespace

KnotExpr parse_knot_expr(std::string_view text) { return KnotParser(text).parse(); }

std::string to_string(const KnotExpr& k)
{
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, KnotExpr::Unknot>)
                return "unknot";
            else if constexpr (std::is_same_v<T, KnotExpr::Torus>)
                return "torus(" + std::to_string(n.spec.p()) + "," + std::to_string(n.spec.q()) + ")";
            else if constexpr (std::is_same_v<T, KnotExpr::Mirror>)
                return "mirror(" + to_string(*n.inner) + ")";
            else
                return "sum(" + to_string(*n.left) + "," + to_string(*n.right) + ")";
        },
        k.node());
}

LaurentPoly alexander_torus(const TorusKnotSpec& k, const std::string& var)
{
    const VariableSet vars{var};
    if (k.is_unknot())
        return LaurentPoly::constant(vars, 1);

    const Exponent pq = checked_mul(k.p(), k.q());
    const LaurentPoly num = binomial_minus_one(var, pq) * binomial_minus_one(var, 1);
    const LaurentPoly den = binomial_minus_one(var, k.p()) * binomial_minus_one(var, k.q());

    LaurentPoly quotient(vars);
    try {
        quotient = exact_divide(num, den);
    } catch (const NotDivisible& e) {
        throw InternalInconsistency(std::string("torus-knot closed formula failed: ") + e.what());
    }
    LaurentPoly delta = symmetrize(quotient);
    if (span(delta) != checked_mul(k.p() - 1, k.q() - 1))
        throw InternalInconsistency("torus-knot Alexander polynomial has the wrong span");
    return delta;
}

LaurentPoly alexander_expr(const KnotExpr& k, const std::string& var)
{
    return std::visit(
        [&var](const auto& n) -> LaurentPoly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, KnotExpr::Unknot>)
                return LaurentPoly::constant(VariableSet{var}, 1);
            else if constexpr (std::is_same_v<T, KnotExpr::Torus>)
                return alexander_torus(n.spec, var);
            else if constexpr (std::is_same_v<T, KnotExpr::Mirror>)
                return alexander_expr(*n.inner, var);
            else
                return symmetrize(alexander_expr(*n.left, var) * alexander_expr(*n.right, var));
        },
        k.node());
}

std::int64_t genus_torus(const TorusKnotSpec& k) { return checked_mul(k.p() - 1, k.q() - 1) / 2; }

Word free_reduce(const Word& w)
{
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GroupPresentation torus_knot_presentation(const TorusKnotSpec& k)
{
    if (k.is_unknot())
        return {{"x"}, {}};
    Word r;
    for (std::int64_t i = 0; i < k.p(); ++i)
        r.push_back({0, +1});
    for (std::int64_t i = 0; i < k.q(); ++i)
        r.push_back({1, -1});
    return {{"x", "y"}, {r}};
}

Abelianization torus_knot_abelianization(const TorusKnotSpec& k)
{
    if (k.is_unknot())
        return {{"x", 1}};
    return {{"x", k.q()}, {"y", k.p()}};
}

LaurentPoly fox_derivative_image(const Word& w, std::size_t j, const std::vector<std::int64_t>& images,
                                 const std::string& var)
{
    std::map<Exponent, Integer> acc;
    Exponent prefix = 0;
    for (const auto& l : w) {
        if (l.generator >= images.size())
            throw InvalidArgument("fox derivative: letter refers to an unknown generator");
        const Exponent img = images[l.generator];
        if (l.sign > 0) {
            if (l.generator == j)
                acc[prefix] += 1;
            prefix = checked_add(prefix, img);
        } else {
            prefix = checked_add(prefix, -img);
            if (l.generator == j)
                acc[prefix] -= 1;
        }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return LaurentPoly::univariate(var, acc);
}

LaurentPoly alexander_fox_oracle(const GroupPresentation& g, const Abelianization& abelianization,
                                 const std::string& var)
{
    std::vector<std::int64_t> images;
    for (const auto& gen : g.generators) {
        auto it = abelianization.find(gen);
        if (it == abelianization.end())
            throw UnsupportedPresentation("abelianization does not map generator '" + gen + "'");
        images.push_back(it->second);
    }

    if (g.generators.size() == 1 && g.relators.empty())
        return LaurentPoly::constant(VariableSet{var}, 1);
    if (g.generators.size() != 2 || g.relators.size() != 1)
        throw UnsupportedPresentation("fox oracle needs a 2-generator 1-relator presentation");

    const Word r = free_reduce(g.relators.front());
    Exponent total = 0;
    for (const auto& l : r) {
        if (l.generator >= 2)
            throw UnsupportedPresentation("relator uses an unknown generator");
        total = checked_add(total, l.sign > 0 ? images[l.generator] : -images[l.generator]);
    }
    if (total != 0)
        throw UnsupportedPresentation("relator does not die in the abelianization");

    // Fundamental formula: sum_j phi(dr/dx_j)(phi(x_j) - 1) = 0, so
    // phi(dr/dx_i) / (phi(x_j) - 1) = +-Delta / (t - 1) for {i, j} = {0, 1}.
    std::size_t i = 0, j = 1;
    if (images[j] == 0)
        std::swap(i, j);
    if (images[j] == 0)
        throw UnsupportedPresentation("both generators abelianize to the identity");

    const LaurentPoly derivative = fox_derivative_image(r, i, images, var);
    const LaurentPoly numerator = derivative * binomial_minus_one(var, 1);
    const LaurentPoly delta = exact_divide(numerator, binomial_minus_one(var, images[j]));
    return symmetrize(delta);
}

} // namespace knotsurgery
