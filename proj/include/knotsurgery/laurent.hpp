#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsurgery/errors.hpp"

namespace knotsurgery {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;
using Exponents = std::vector<Exponent>;

/// Ordered list of distinct variable names. The order fixes the slot layout
/// of every exponent vector and therefore the canonical term order.
class VariableSet {
public:
    VariableSet() = default;
    VariableSet(std::initializer_list<std::string> names);
    explicit VariableSet(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// Copy with `name` removed.
    VariableSet without(std::string_view name) const;

    friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
    std::vector<std::string> names_;
};

/// Checked exponent arithmetic; throws ExponentOverflow instead of wrapping.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Sparse Laurent polynomial with integer coefficients. Terms are keyed by
/// exponent vectors in lexicographic order and never hold a zero coefficient.
/// Values are immutable once built; every operation returns a new value.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Integer>;

    /// The zero polynomial over `vars`.
    explicit LaurentPoly(VariableSet vars = {});

    /// Builds from raw terms; zero coefficients are dropped and duplicates merged.
    LaurentPoly(VariableSet vars, const std::vector<std::pair<Exponents, Integer>>& terms);

    static LaurentPoly constant(VariableSet vars, const Integer& c);
    static LaurentPoly monomial(VariableSet vars, Exponents exps, const Integer& c = 1);
    /// The single variable `name` of `vars` raised to `power`.
    static LaurentPoly variable(VariableSet vars, std::string_view name, Exponent power = 1);

    /// Single-variable helper: sum of coeff * t^exp.
    static LaurentPoly univariate(std::string name, const std::map<Exponent, Integer>& coeffs);

    const VariableSet& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given exponent vector (zero if absent).
    Integer coefficient(const Exponents& exps) const;

    LaurentPoly operator-() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void insert_term(const Exponents& exps, const Integer& c);

    VariableSet vars_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, std::uint64_t k);

/// Monomial substitution: each variable of `a` is mapped to an exponent
/// vector over `target`. Every variable of `a` must be mapped.
using MonomialImages = std::map<std::string, Exponents, std::less<>>;
LaurentPoly substitute(const LaurentPoly& a, const VariableSet& target, const MonomialImages& images);

/// Sets `var` = 1; the result lives over the variable set with `var` removed.
LaurentPoly evaluate_at_one(const LaurentPoly& a, std::string_view var);

/// Exact quotient of single-variable polynomials; throws NotDivisible when
/// the remainder is nonzero and DivisionByZero when `den` is zero.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

inline std::size_t term_count(const LaurentPoly& a) { return a.term_count(); }

/// Lowest and highest exponent of a nonzero single-variable polynomial.
Exponent low_degree(const LaurentPoly& a);
Exponent high_degree(const LaurentPoly& a);
/// high_degree - low_degree; zero for the zero polynomial.
Exponent span(const LaurentPoly& a);

/// The unit multiple +-t^k * a satisfying P(1/t) = P(t) with a positive top
/// coefficient. Throws NotSymmetrizable when no such unit exists.
LaurentPoly symmetrize(const LaurentPoly& a);

/// Representative shifted to lowest exponent 0 with a positive top coefficient.
LaurentPoly normalize_ordinary(const LaurentPoly& a);

/// True iff a = +-t^k * b for some k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Text form, e.g. `t_K^2*t_G^-1 - 3`. Terms appear in descending
/// lexicographic exponent order; the zero polynomial prints as `0`.
std::string to_string(const LaurentPoly& a);

/// Parses the text form over a fixed variable set.
LaurentPoly parse_poly(std::string_view text, const VariableSet& vars);
/// Parses the text form, taking variables in order of first appearance.
LaurentPoly parse_poly(std::string_view text);

} // namespace knotsurgery
