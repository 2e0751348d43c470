#include "knotsurgery/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace knotsurgery {

VariableSet::VariableSet(std::initializer_list<std::string> names)
    : VariableSet(std::vector<std::string>(names))
{
}

VariableSet::VariableSet(std::vector<std::string> names)
    : names_(std::move(names))
{
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw InvalidArgument("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw InvalidArgument("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VariableSet VariableSet::without(std::string_view name) const
{
    std::vector<std::string> rest;
    for (const auto& n : names_)
        if (n != name)
            rest.push_back(n);
    return VariableSet(std::move(rest));
}

Exponent checked_add(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_add_overflow(a, b, &r))
        throw ExponentOverflow("exponent overflow in addition");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ExponentOverflow("exponent overflow in multiplication");
    return r;
}

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b, const char* op)
{
    if (a.variables() != b.variables())
        throw VariableMismatch(std::string(op) + ": operands live over different variable sets");
}

void require_univariate(const LaurentPoly& a, const char* op)
{
    if (a.variables().size() > 1)
        throw InvalidArgument(std::string(op) + " requires a single-variable polynomial");
}

// Variable set shared by two polynomials with at most one variable each.
// A constant (zero variables) adopts the other operand's variable.
VariableSet univariate_common(const LaurentPoly& a, const LaurentPoly& b, const char* op)
{
    require_univariate(a, op);
    require_univariate(b, op);
    if (a.variables().empty())
        return b.variables();
    if (!b.variables().empty() && a.variables() != b.variables())
        throw VariableMismatch(std::string(op) + ": operands use different variables");
    return a.variables();
}

using Dense = std::map<Exponent, Integer>;

Dense to_dense(const LaurentPoly& a)
{
    Dense out;
    for (const auto& [exps, c] : a.terms())
        out.emplace(exps.empty() ? 0 : exps[0], c);
    return out;
}

LaurentPoly from_dense(const VariableSet& vars, const Dense& d)
{
    std::vector<std::pair<Exponents, Integer>> terms;
    terms.reserve(d.size());
    for (const auto& [e, c] : d) {
        if (vars.empty() && e != 0)
            throw InvalidArgument("nonzero exponent on a constant polynomial");
        terms.emplace_back(vars.empty() ? Exponents{} : Exponents{e}, c);
    }
    return LaurentPoly(vars, terms);
}

Exponents shift_exponents(const Exponents& a, const Exponents& b)
{
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_add(a[i], b[i]);
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(VariableSet vars)
    : vars_(std::move(vars))
{
}

LaurentPoly::LaurentPoly(VariableSet vars, const std::vector<std::pair<Exponents, Integer>>& terms)
    : vars_(std::move(vars))
{
    for (const auto& [exps, c] : terms) {
        if (exps.size() != vars_.size())
            throw InvalidArgument("exponent vector length does not match the variable set");
        insert_term(exps, c);
    }
}

LaurentPoly LaurentPoly::constant(VariableSet vars, const Integer& c)
{
    Exponents zero(vars.size(), 0);
    return LaurentPoly(std::move(vars), {{zero, c}});
}

LaurentPoly LaurentPoly::monomial(VariableSet vars, Exponents exps, const Integer& c)
{
    return LaurentPoly(std::move(vars), {{std::move(exps), c}});
}

LaurentPoly LaurentPoly::variable(VariableSet vars, std::string_view name, Exponent power)
{
    auto idx = vars.index_of(name);
    if (!idx)
        throw UnknownVariable("unknown variable '" + std::string(name) + "'");
    Exponents exps(vars.size(), 0);
    exps[*idx] = power;
    return monomial(std::move(vars), std::move(exps));
}

LaurentPoly LaurentPoly::univariate(std::string name, const std::map<Exponent, Integer>& coeffs)
{
    return from_dense(VariableSet{std::move(name)}, coeffs);
}

Integer LaurentPoly::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::insert_term(const Exponents& exps, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e, Integer(-c));
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_vars(a, b, "add");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_)
        r.insert_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_vars(a, b, "sub");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_)
        r.insert_term(e, Integer(-c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_vars(a, b, "mul");
    LaurentPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert_term(shift_exponents(ea, eb), ca * cb);
    return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& a, std::uint64_t k)
{
    LaurentPoly result = LaurentPoly::constant(a.variables(), 1);
    LaurentPoly base = a;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

LaurentPoly substitute(const LaurentPoly& a, const VariableSet& target, const MonomialImages& images)
{
    std::vector<const Exponents*> slot_images;
    slot_images.reserve(a.variables().size());
    for (const auto& name : a.variables().names()) {
        auto it = images.find(name);
        if (it == images.end())
            throw UnknownVariable("substitute: variable '" + name + "' is not mapped");
        if (it->second.size() != target.size())
            throw InvalidArgument("substitute: image of '" + name + "' has the wrong length");
        slot_images.push_back(&it->second);
    }

    std::vector<std::pair<Exponents, Integer>> terms;
    terms.reserve(a.term_count());
    for (const auto& [exps, c] : a.terms()) {
        Exponents image(target.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            const auto& img = *slot_images[i];
            for (std::size_t j = 0; j < image.size(); ++j)
                image[j] = checked_add(image[j], checked_mul(exps[i], img[j]));
        }
        terms.emplace_back(std::move(image), c);
    }
    return LaurentPoly(target, terms);
}

LaurentPoly evaluate_at_one(const LaurentPoly& a, std::string_view var)
{
    auto idx = a.variables().index_of(var);
    if (!idx)
        throw UnknownVariable("evaluate_at_one: unknown variable '" + std::string(var) + "'");
    std::vector<std::pair<Exponents, Integer>> terms;
    terms.reserve(a.term_count());
    for (const auto& [exps, c] : a.terms()) {
        Exponents reduced;
        reduced.reserve(exps.size() - 1);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (i != *idx)
                reduced.push_back(exps[i]);
        terms.emplace_back(std::move(reduced), c);
    }
    return LaurentPoly(a.variables().without(var), terms);
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den)
{
    VariableSet vars = univariate_common(num, den, "exact_divide");
    if (den.is_zero())
        throw DivisionByZero("exact_divide: division by the zero polynomial");
    if (num.is_zero())
        return LaurentPoly(vars);

    Dense rem = to_dense(num);
    const Dense d = to_dense(den);
    const auto& [dtop, dlead] = *d.rbegin();
    const Exponent qlow = checked_add(rem.begin()->first, -d.begin()->first);

    Dense quotient;
    while (!rem.empty()) {
        const auto [rtop, rlead] = *rem.rbegin();
        const Exponent qe = checked_add(rtop, -dtop);
        if (qe < qlow)
            throw NotDivisible("exact_divide: nonzero remainder");
        Integer qc, r;
        boost::multiprecision::divide_qr(rlead, dlead, qc, r);
        if (r != 0)
            throw NotDivisible("exact_divide: leading coefficient does not divide");
        quotient.emplace(qe, qc);
        for (const auto& [de, dc] : d) {
            const Exponent e = checked_add(qe, de);
            const Integer delta = qc * dc;
            auto [it, inserted] = rem.try_emplace(e, Integer(-delta));
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0)
                    rem.erase(it);
            }
        }
    }
    return from_dense(vars, quotient);
}

Exponent low_degree(const LaurentPoly& a)
{
    require_univariate(a, "low_degree");
    if (a.is_zero())
        throw InvalidArgument("low_degree of the zero polynomial");
    const auto& e = a.terms().begin()->first;
    return e.empty() ? 0 : e[0];
}

Exponent high_degree(const LaurentPoly& a)
{
    require_univariate(a, "high_degree");
    if (a.is_zero())
        throw InvalidArgument("high_degree of the zero polynomial");
    const auto& e = a.terms().rbegin()->first;
    return e.empty() ? 0 : e[0];
}

Exponent span(const LaurentPoly& a)
{
    if (a.is_zero())
        return 0;
    return checked_add(high_degree(a), -low_degree(a));
}

LaurentPoly symmetrize(const LaurentPoly& a)
{
    require_univariate(a, "symmetrize");
    if (a.is_zero())
        throw NotSymmetrizable("symmetrize: the zero polynomial has no symmetric representative");
    const Exponent lo = low_degree(a);
    const Exponent hi = high_degree(a);
    const Exponent total = checked_add(lo, hi);
    if (total % 2 != 0)
        throw NotSymmetrizable("symmetrize: odd exponent span " + to_string(a));
    const Exponent shift = -total / 2;
    const bool negate = a.terms().rbegin()->second < 0;

    Dense shifted;
    for (const auto& [e, c] : to_dense(a))
        shifted.emplace(checked_add(e, shift), negate ? Integer(-c) : c);
    for (const auto& [e, c] : shifted) {
        auto mirror = shifted.find(-e);
        if (mirror == shifted.end() || mirror->second != c)
            throw NotSymmetrizable("symmetrize: not a unit multiple of a symmetric polynomial: "
                                   + to_string(a));
    }
    return from_dense(a.variables(), shifted);
}

LaurentPoly normalize_ordinary(const LaurentPoly& a)
{
    require_univariate(a, "normalize_ordinary");
    if (a.is_zero())
        return a;
    const Exponent shift = -low_degree(a);
    const bool negate = a.terms().rbegin()->second < 0;
    Dense out;
    for (const auto& [e, c] : to_dense(a))
        out.emplace(checked_add(e, shift), negate ? Integer(-c) : c);
    return from_dense(a.variables(), out);
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.variables().size() > 1 || b.variables().size() > 1)
        return false;
    if (!a.variables().empty() && !b.variables().empty() && a.variables() != b.variables())
        return false;
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return to_dense(normalize_ordinary(a)) == to_dense(normalize_ordinary(b));
}

std::string to_string(const LaurentPoly& a)
{
    if (a.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    const auto& names = a.variables().names();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [exps, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names[i];
            if (exps[i] != 1)
                mono += '^' + std::to_string(exps[i]);
        }
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mono.empty())
            out << mag;
        else if (mag == 1)
            out << mono;
        else
            out << mag << '*' << mono;
    }
    return out.str();
}

namespace {

struct Factor {
    std::string name;
    Exponent power;
};

struct ParsedTerm {
    Integer coeff;
    std::vector<Factor> factors;
};

class PolyParser {
public:
    explicit PolyParser(std::string_view text)
        : text_(text)
    {
    }

    std::vector<ParsedTerm> parse()
    {
        std::vector<ParsedTerm> out;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = take() == '-';
            skip_ws();
        }
        out.push_back(term(negative));
        skip_ws();
        while (!at_end()) {
            const char op = take();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            skip_ws();
            out.push_back(term(op == '-'));
            skip_ws();
        }
        return out;
    }

private:
    ParsedTerm term(bool negative)
    {
        ParsedTerm t{1, {}};
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = Integer(digits());
            skip_ws();
            if (at_end() || peek() != '*')
                return finish(std::move(t), negative);
            take();
            skip_ws();
        }
        t.factors.push_back(factor());
        skip_ws();
        while (!at_end() && peek() == '*') {
            take();
            skip_ws();
            t.factors.push_back(factor());
            skip_ws();
        }
        return finish(std::move(t), negative);
    }

    static ParsedTerm finish(ParsedTerm t, bool negative)
    {
        if (negative)
            t.coeff = -t.coeff;
        return t;
    }

    Factor factor()
    {
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected a variable name");
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        Factor f{std::string(text_.substr(start, pos_ - start)), 1};
        skip_ws();
        if (!at_end() && peek() == '^') {
            take();
            skip_ws();
            bool neg = false;
            if (!at_end() && (peek() == '-' || peek() == '+'))
                neg = take() == '-';
            std::string d = digits();
            Exponent e = 0;
            for (char ch : d)
                e = checked_add(checked_mul(e, 10), ch - '0');
            f.power = neg ? -e : e;
        }
        return f;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what
                         + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

LaurentPoly build(const std::vector<ParsedTerm>& parsed, const VariableSet& vars)
{
    std::vector<std::pair<Exponents, Integer>> terms;
    for (const auto& t : parsed) {
        Exponents exps(vars.size(), 0);
        for (const auto& f : t.factors) {
            auto idx = vars.index_of(f.name);
            if (!idx)
                throw ParseError("unknown variable '" + f.name + "'");
            exps[*idx] = checked_add(exps[*idx], f.power);
        }
        terms.emplace_back(std::move(exps), t.coeff);
    }
    return LaurentPoly(vars, terms);
}

} // namespace

LaurentPoly parse_poly(std::string_view text, const VariableSet& vars)
{
    return build(PolyParser(text).parse(), vars);
}

LaurentPoly parse_poly(std::string_view text)
{
    auto parsed = PolyParser(text).parse();
    std::vector<std::string> names;
    for (const auto& t : parsed)
        for (const auto& f : t.factors)
            if (std::find(names.begin(), names.end(), f.name) == names.end())
                names.push_back(f.name);
    return build(parsed, VariableSet(std::move(names)));
}

} // namespace knotsurgery
