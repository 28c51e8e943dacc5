#pragma once

#include <plaincharts/errors.hpp>
#include <plaincharts/rational.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace plaincharts {

/// Exponent vector of a monomial; length equals the ring arity.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Admissible monomial orders. A block order compares the first `split`
/// variables first (by grevlex) and therefore eliminates them.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder block(int split) { return MonomialOrder(Kind::block, split); }

    Kind kind() const { return kind_; }
    int split() const { return split_; }

    /// Returns <0, 0, >0 as a is below, equal to, above b.
    int compare(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && split_ == o.split_;
    }

private:
    MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}
    Kind kind_;
    int split_;
};

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// An ordered list of variable names together with a default monomial
/// order. Rings are compatible when their variable lists coincide.
class PolyRing {
public:
    static PolyRingPtr make(std::vector<std::string> vars,
                            MonomialOrder order = MonomialOrder::grevlex());

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t index_of_checked(const std::string& name) const;
    bool has_var(const std::string& name) const { return index_of(name).has_value(); }

    static bool compatible(const PolyRingPtr& a, const PolyRingPtr& b);

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order);
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored canonically (no zero coefficients), so equality is
/// term-set equality and independent of any monomial order.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    static Polynomial zero(PolyRingPtr ring);
    static Polynomial constant(PolyRingPtr ring, const Rational& c);
    static Polynomial variable(PolyRingPtr ring, const std::string& name);
    static Polynomial monomial(PolyRingPtr ring, Exponents exps, const Rational& c);
    static Polynomial from_terms(PolyRingPtr ring, TermMap terms);

    const PolyRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero constant value; only valid on constant polynomials.
    Rational constant_value() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(std::size_t var_index) const;

    /// Largest exponent vector under the given order; poly must be nonzero.
    const Exponents& leading_exponents(const MonomialOrder& order) const;
    const Rational& leading_coefficient(const MonomialOrder& order) const;

    Rational coefficient(const Exponents& e) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const;

    /// Divides out the rational content, leaving integer coefficients with
    /// positive leading (grevlex) coefficient. Generates the same ideal.
    Polynomial cleared_content() const;

    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

private:
    PolyRingPtr ring_;
    TermMap terms_;

    void insert_term(const Exponents& e, const Rational& c);
    static void check_same_ring(const Polynomial& a, const Polynomial& b);
};

/// q with q * d = f, or nullopt when d does not divide f. d must be nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d);
/// Same, throwing NotDivisibleError instead of returning nullopt.
Polynomial exact_divide_or_throw(const Polynomial& f, const Polynomial& d);

Polynomial partial_derivative(const Polynomial& f, const std::string& var);

/// Replaces `target` by `target + shift`, fully expanded. Both must be
/// distinct ring variables.
Polynomial taylor_shift(const Polynomial& f, const std::string& target,
                        const std::string& shift);

/// Simultaneous substitution into `target` ring. Variables without an
/// assignment must exist in the target ring and map to themselves.
Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignments,
                      const PolyRingPtr& target);

/// Substitution where images are fractions num/den over `target`.
/// Returns the result as a single cleared fraction {num, den}.
struct Fraction {
    Polynomial num;
    Polynomial den;
};
Fraction substitute_fractions(const Polynomial& f,
                              const std::map<std::string, Fraction>& assignments,
                              const PolyRingPtr& target);

Rational evaluate(const Polynomial& f, const RationalPoint& point);

} // namespace plaincharts
