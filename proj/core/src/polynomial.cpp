#include <plaincharts/polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace plaincharts {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

namespace {

int grevlex_cmp(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i > lo; --i) {
        if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    }
    return 0;
}

int lex_cmp(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    switch (kind_) {
    case Kind::grevlex:
        return grevlex_cmp(a, b, 0, a.size());
    case Kind::lex:
        return lex_cmp(a, b);
    case Kind::block: {
        std::size_t s = static_cast<std::size_t>(split_);
        if (int c = grevlex_cmp(a, b, 0, std::min(s, a.size())); c != 0) return c;
        if (s >= a.size()) return 0;
        return grevlex_cmp(a, b, s, a.size());
    }
    }
    return 0;
}

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {}

PolyRingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ValidationError("empty variable name");
        if (!seen.insert(v).second)
            throw ValidationError("duplicate variable name '" + v + "'");
    }
    return PolyRingPtr(new PolyRing(std::move(vars), order));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t PolyRing::index_of_checked(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw UnknownVariableError("unknown variable '" + name + "'");
    return *i;
}

bool PolyRing::compatible(const PolyRingPtr& a, const PolyRingPtr& b) {
    return a == b || (a && b && a->vars() == b->vars());
}

void Polynomial::check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!PolyRing::compatible(a.ring_, b.ring_))
        throw RingMismatchError("polynomials live in different rings");
}

Polynomial Polynomial::zero(PolyRingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Rational& c) {
    Polynomial p = zero(std::move(ring));
    if (c != 0) p.terms_[Exponents(p.ring_->arity(), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, const std::string& name) {
    std::size_t i = ring->index_of_checked(name);
    Polynomial p = zero(std::move(ring));
    Exponents e(p.ring_->arity(), 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Exponents exps, const Rational& c) {
    if (exps.size() != ring->arity())
        throw RingMismatchError("exponent vector arity mismatch");
    for (int e : exps)
        if (e < 0) throw ValidationError("negative exponent");
    Polynomial p = zero(std::move(ring));
    if (c != 0) p.terms_[std::move(exps)] = c;
    return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, TermMap terms) {
    Polynomial p = zero(std::move(ring));
    for (auto& [e, c] : terms) {
        if (e.size() != p.ring_->arity())
            throw RingMismatchError("exponent vector arity mismatch");
        if (c != 0) p.terms_.emplace(e, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

int Polynomial::degree_in(std::size_t var_index) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

const Exponents& Polynomial::leading_exponents(const MonomialOrder& order) const {
    const Exponents* best = nullptr;
    for (const auto& [e, c] : terms_) {
        if (!best || order.less(*best, e)) best = &e;
    }
    if (!best) throw Error("leading term of zero polynomial");
    return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& order) const {
    return terms_.at(leading_exponents(order));
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::insert_term(const Exponents& e, const Rational& c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = zero(ring_);
    Exponents sum(ring_->arity(), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            r.insert_term(sum, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r = *this;
    for (auto& [e, cc] : r.terms_) cc *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(*this, o);
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::cleared_content() const {
    if (is_zero()) return *this;
    // lcm of denominators / gcd of numerators
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    Polynomial r = *this * scale;
    if (r.leading_coefficient(MonomialOrder::grevlex()) < 0) r = -r;
    return r;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw Error("division by zero polynomial");
    if (!PolyRing::compatible(f.ring(), d.ring()))
        throw RingMismatchError("exact_divide: ring mismatch");
    const MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial rem = f;
    Polynomial quot = Polynomial::zero(f.ring());
    const Exponents& dlead = d.leading_exponents(ord);
    const Rational& dlc = d.leading_coefficient(ord);
    while (!rem.is_zero()) {
        const Exponents& rlead = rem.leading_exponents(ord);
        Exponents q(rlead.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rlead[i] - dlead[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational c = rem.leading_coefficient(ord) / dlc;
        Polynomial m = Polynomial::monomial(f.ring(), std::move(q), c);
        quot += m;
        rem -= m * d;
    }
    return quot;
}

Polynomial exact_divide_or_throw(const Polynomial& f, const Polynomial& d) {
    auto q = exact_divide(f, d);
    if (!q) throw NotDivisibleError("polynomial division is not exact");
    return *q;
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
    std::size_t i = f.ring()->index_of_checked(var);
    Polynomial::TermMap out;
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        out[std::move(d)] = c * e[i];
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& assignments,
                      const PolyRingPtr& target) {
    std::size_t n = f.ring()->arity();
    for (const auto& [name, img] : assignments) {
        f.ring()->index_of_checked(name);
        if (!PolyRing::compatible(img.ring(), target))
            throw RingMismatchError("substitution image not in target ring");
    }
    // images resolved lazily so unused variables need not exist in target
    std::vector<std::optional<Polynomial>> images(n);
    auto image = [&](std::size_t i) -> const Polynomial& {
        if (!images[i]) {
            const std::string& name = f.ring()->var(i);
            auto it = assignments.find(name);
            images[i] = it != assignments.end() ? it->second
                                                : Polynomial::variable(target, name);
        }
        return *images[i];
    };
    Polynomial result = Polynomial::zero(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] > 0) term *= image(i).pow(static_cast<unsigned>(e[i]));
        }
        result += term;
    }
    return result;
}

Fraction substitute_fractions(const Polynomial& f,
                              const std::map<std::string, Fraction>& assignments,
                              const PolyRingPtr& target) {
    std::size_t n = f.ring()->arity();
    for (const auto& [name, img] : assignments) f.ring()->index_of_checked(name);
    std::vector<std::optional<Fraction>> fracs(n);
    std::vector<int> degs(n, 0);
    auto frac = [&](std::size_t i) -> const Fraction& {
        if (!fracs[i]) {
            const std::string& name = f.ring()->var(i);
            auto it = assignments.find(name);
            fracs[i] = it != assignments.end()
                           ? it->second
                           : Fraction{Polynomial::variable(target, name),
                                      Polynomial::constant(target, 1)};
        }
        return *fracs[i];
    };
    for (std::size_t i = 0; i < n; ++i) degs[i] = f.degree_in(i);
    // f(n_i/d_i) = N / prod d_i^{deg_i}; each term is padded with the
    // complementary denominator powers.
    Polynomial N = Polynomial::zero(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (degs[i] == 0) continue;
            if (e[i] > 0) term *= frac(i).num.pow(static_cast<unsigned>(e[i]));
            int pad = degs[i] - e[i];
            if (pad > 0) term *= frac(i).den.pow(static_cast<unsigned>(pad));
        }
        N += term;
    }
    Polynomial D = Polynomial::constant(target, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (degs[i] > 0) D *= frac(i).den.pow(static_cast<unsigned>(degs[i]));
    }
    return {N, D};
}

Polynomial taylor_shift(const Polynomial& f, const std::string& target,
                        const std::string& shift) {
    if (target == shift) throw ValidationError("taylor_shift: target equals shift");
    f.ring()->index_of_checked(target);
    f.ring()->index_of_checked(shift);
    Polynomial img = Polynomial::variable(f.ring(), target) +
                     Polynomial::variable(f.ring(), shift);
    return substitute(f, {{target, img}}, f.ring());
}

Rational evaluate(const Polynomial& f, const RationalPoint& point) {
    if (point.size() != f.ring()->arity())
        throw RingMismatchError("evaluate: point arity mismatch");
    std::size_t n = point.size();
    std::vector<std::vector<Rational>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].push_back(Rational(1));
    }
    Rational sum = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < n; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(powers[i].back() * point[i]);
            if (e[i] > 0) term *= powers[i][e[i]];
        }
        sum += term;
    }
    return sum;
}

} // namespace plaincharts
