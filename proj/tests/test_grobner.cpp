#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <plaincharts/format.hpp>
#include <plaincharts/groebner.hpp>

#include <algorithm>

using namespace plaincharts;
using plaincharts::testing::P;
using plaincharts::testing::Rng;

namespace {

// Writes f as a polynomial in the variable at t_index with coefficients in
// the ring without that variable.
std::vector<Polynomial> coeffs_in(const Polynomial& f, std::size_t t_index,
                                  const PolyRingPtr& rest_ring) {
    int d = f.degree_in(t_index);
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1,
                                Polynomial::zero(rest_ring));
    for (const auto& [e, c] : f.terms()) {
        Exponents r;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != t_index) r.push_back(e[i]);
        out[static_cast<std::size_t>(e[t_index])] +=
            Polynomial::monomial(rest_ring, r, c);
    }
    return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m,
                       const PolyRingPtr& ring) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * determinant(std::move(minor), ring);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Independent oracle: Sylvester resultant of f and g with respect to the
// named variable.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g,
                               const std::string& var,
                               const PolyRingPtr& rest_ring) {
    std::size_t ti = f.ring()->index_of_checked(var);
    auto a = coeffs_in(f, ti, rest_ring);
    auto b = coeffs_in(g, ti, rest_ring);
    std::size_t da = a.size() - 1, db = b.size() - 1;
    std::size_t n = da + db;
    std::vector<std::vector<Polynomial>> m(
        n, std::vector<Polynomial>(n, Polynomial::zero(rest_ring)));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = a[da - k];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = b[db - k];
    return determinant(std::move(m), rest_ring);
}

bool spolys_reduce_to_zero(const GroebnerBasis& g) {
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < g.basis.size(); ++j) {
            // S-polynomial by hand, then reduce by the basis
            const auto& fi = g.basis[i];
            const auto& fj = g.basis[j];
            const Exponents& li = fi.leading_exponents(g.order);
            const Exponents& lj = fj.leading_exponents(g.order);
            Exponents mi(li.size()), mj(li.size());
            for (std::size_t k = 0; k < li.size(); ++k) {
                int l = std::max(li[k], lj[k]);
                mi[k] = l - li[k];
                mj[k] = l - lj[k];
            }
            Polynomial s =
                Polynomial::monomial(g.ring, mi,
                                     Rational(1) / fi.leading_coefficient(g.order)) * fi -
                Polynomial::monomial(g.ring, mj,
                                     Rational(1) / fj.leading_coefficient(g.order)) * fj;
            if (!normal_form(s, g).is_zero()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("buchberger: monomial ideal") {
    auto ring = PolyRing::make({"x", "y"});
    auto g = buchberger_reduced(Ideal::make(ring, {P(ring, "x"), P(ring, "y")}),
                                MonomialOrder::grevlex());
    REQUIRE(g.basis.size() == 2);
    // basis is sorted ascending by leading term; grevlex has y below x
    CHECK(g.basis[0] == P(ring, "y"));
    CHECK(g.basis[1] == P(ring, "x"));
    CHECK(spolys_reduce_to_zero(g));
}

TEST_CASE("buchberger: twisted cubic under lex z>y>x") {
    auto ring = PolyRing::make({"z", "y", "x"}, MonomialOrder::lex());
    Polynomial a = P(ring, "y-x^2");
    Polynomial b = P(ring, "z-x^3");
    auto g = buchberger_reduced(Ideal::make(ring, {a, b}), MonomialOrder::lex());
    CHECK(std::find(g.basis.begin(), g.basis.end(), a) != g.basis.end());
    CHECK(std::find(g.basis.begin(), g.basis.end(), b) != g.basis.end());
    CHECK(spolys_reduce_to_zero(g));
}

TEST_CASE("buchberger: reduced basis invariant under permutation and rescaling") {
    auto ring = PolyRing::make({"x", "y", "z"});
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial> gens;
        int n = rng.integer(1, 3);
        for (int i = 0; i < n; ++i) gens.push_back(rng.nonzero_polynomial(ring, 2, 3));
        auto g1 = buchberger_reduced(Ideal::make(ring, gens), MonomialOrder::grevlex());

        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng.engine);
        for (auto& p : shuffled) p = p * rng.nonzero_rational();
        auto g2 = buchberger_reduced(Ideal::make(ring, shuffled), MonomialOrder::grevlex());
        CHECK(g1.basis == g2.basis);
    }
}

TEST_CASE("buchberger: budget guard raises a distinct error") {
    auto ring = PolyRing::make({"x", "y", "z"});
    Ideal ideal = Ideal::make(
        ring, {P(ring, "x^3+y^3+z^3"), P(ring, "x^2*y-z^2"), P(ring, "y^2*z-x^2")});
    CHECK_THROWS_AS(buchberger_reduced(ideal, MonomialOrder::grevlex(), 2),
                    BudgetExceededError);
}

TEST_CASE("normal_form: space curve relation reduces to zero") {
    auto ring = PolyRing::make({"x", "y", "z"});
    Polynomial a = P(ring, "y^2-x^3+x");
    Polynomial b = P(ring, "z^2-y^3+y");
    Polynomial f = P(ring, "z^2-y*(x^3-x-1)");
    // explicit certificate first: f = b + y*a
    CHECK(f == b + P(ring, "y") * a);
    auto g = buchberger_reduced(Ideal::make(ring, {a, b}), MonomialOrder::grevlex());
    CHECK(normal_form(f, g).is_zero());
}

TEST_CASE("normal_form: constants are irreducible modulo (x)") {
    auto ring = PolyRing::make({"x", "y"});
    auto g = buchberger_reduced(Ideal::make(ring, {P(ring, "x")}),
                                MonomialOrder::grevlex());
    CHECK(normal_form(P(ring, "1"), g) == P(ring, "1"));
}

TEST_CASE("normal_form: explicit combinations reduce to zero") {
    auto ring = PolyRing::make({"x", "y"});
    Rng rng(103);
    Polynomial a = P(ring, "x^2+y");
    Polynomial b = P(ring, "x*y-1");
    auto g = buchberger_reduced(Ideal::make(ring, {a, b}), MonomialOrder::grevlex());
    for (int i = 0; i < 50; ++i) {
        Polynomial comb = rng.polynomial(ring, 2, 3) * a + rng.polynomial(ring, 2, 3) * b;
        CHECK(normal_form(comb, g).is_zero());
    }
}

TEST_CASE("ideal_membership: basic and worked examples") {
    auto ring = PolyRing::make({"x", "y", "z"});
    Ideal ideal = Ideal::make(ring, {P(ring, "y^2-x^3+x"), P(ring, "z^2-y^3+y")});
    CHECK(ideal_membership(P(ring, "z^2-y*(x^3-x-1)"), ideal));
    Ideal xy = Ideal::make(ring, {P(ring, "x"), P(ring, "y")});
    CHECK(!ideal_membership(P(ring, "1"), xy));
}

TEST_CASE("ideal_membership: stable under generator shifts") {
    auto ring = PolyRing::make({"x", "y"});
    Rng rng(107);
    Ideal ideal = Ideal::make(ring, {P(ring, "x^2-y"), P(ring, "x*y")});
    for (int i = 0; i < 50; ++i) {
        Polynomial f = rng.polynomial(ring, 3, 4);
        Polynomial shift = rng.polynomial(ring, 2, 3) * ideal.generators[0] +
                           rng.polynomial(ring, 2, 3) * ideal.generators[1];
        CHECK(ideal_membership(f, ideal) == ideal_membership(f + shift, ideal));
    }
}

TEST_CASE("ideal_equality: permutation, rescaling, localized center generators") {
    auto ring = PolyRing::make({"x", "y"});
    CHECK(ideal_equality(Ideal::make(ring, {P(ring, "x"), P(ring, "y")}),
                         Ideal::make(ring, {P(ring, "y"), P(ring, "x")})));
    Rng rng(109);
    for (int i = 0; i < 50; ++i) {
        std::vector<Polynomial> gens = {rng.nonzero_polynomial(ring, 2, 3),
                                        rng.nonzero_polynomial(ring, 2, 3)};
        std::vector<Polynomial> scaled;
        for (const auto& p : gens) scaled.push_back(p * rng.nonzero_rational());
        CHECK(ideal_equality(Ideal::make(ring, gens), Ideal::make(ring, scaled)));
    }

    // elliptic center: (f, f1) = (f, z) once g is inverted
    auto ext = PolyRing::make({"x", "y", "z", "w"});
    Polynomial f = P(ext, "x-x^3+y^2");
    Polynomial f1 = P(ext, "x+z-(x+z)^3+y^2");
    Polynomial inv = P(ext, "1-w*(1-3*x^2-3*x*z-z^2)");
    CHECK(ideal_equality(Ideal::make(ext, {f, f1, inv}),
                         Ideal::make(ext, {f, P(ext, "z"), inv})));
}

TEST_CASE("elimination_ideal: resultant oracle on (y1-x*t, y2-y*t)") {
    auto ring = PolyRing::make({"t", "x", "y", "y1", "y2"});
    auto rest = PolyRing::make({"x", "y", "y1", "y2"});
    Polynomial a = P(ring, "y1-x*t");
    Polynomial b = P(ring, "y2-y*t");
    Ideal elim = elimination_ideal(Ideal::make(ring, {a, b}), {"t"});
    REQUIRE(elim.generators.size() == 1);
    Polynomial res = sylvester_resultant(a, b, "t", rest).cleared_content();
    CHECK(elim.generators[0].cleared_content() == res);
}

TEST_CASE("elimination_ideal: parametrized parabola and no-op") {
    auto ring = PolyRing::make({"t", "x", "y"});
    Ideal ideal = Ideal::make(ring, {P(ring, "x-t"), P(ring, "y-t^2")});
    Ideal elim = elimination_ideal(ideal, {"t"});
    auto xy = PolyRing::make({"x", "y"});
    REQUIRE(elim.generators.size() == 1);
    CHECK(elim.generators[0].cleared_content() ==
          P(xy, "y-x^2").cleared_content());

    Ideal same = elimination_ideal(ideal, {});
    auto g1 = buchberger_reduced(ideal, MonomialOrder::grevlex());
    auto g2 = buchberger_reduced(
        Ideal::make(ring, [&] {
            std::vector<Polynomial> v;
            for (const auto& p : same.generators) v.push_back(substitute(p, {}, ring));
            return v;
        }()),
        MonomialOrder::grevlex());
    CHECK(g1.basis == g2.basis);

    CHECK_THROWS_AS(elimination_ideal(ideal, {"t", "x", "y"}), ValidationError);
}

TEST_CASE("elimination result contains no dropped variable") {
    auto ring = PolyRing::make({"t", "x", "y"});
    Rng rng(113);
    for (int i = 0; i < 10; ++i) {
        Ideal ideal = Ideal::make(ring, {rng.nonzero_polynomial(ring, 2, 3),
                                         rng.nonzero_polynomial(ring, 2, 3)});
        Ideal elim = elimination_ideal(ideal, {"t"});
        for (const auto& g : elim.generators) CHECK(!g.ring()->has_var("t"));
    }
}

TEST_CASE("is_unit_modulo: worked examples") {
    auto r2 = PolyRing::make({"x", "y"});
    auto r3 = PolyRing::make({"x", "y", "z"});
    Polynomial g = P(r2, "x^2+y+1");
    CHECK(is_unit_modulo(g, {}, {g}));
    Polynomial s = P(r3, "1-x*y");
    CHECK(is_unit_modulo(s, {}, {s}));
    CHECK(!is_unit_modulo(P(r2, "x"), {}, {P(r2, "y")}));
}

TEST_CASE("is_unit_modulo: multiplicative on random inputs") {
    auto ring = PolyRing::make({"x", "y"});
    Rng rng(127);
    std::vector<Polynomial> ineqs = {P(ring, "x"), P(ring, "1+x*y")};
    for (int i = 0; i < 15; ++i) {
        Polynomial f = rng.nonzero_polynomial(ring, 2, 2);
        Polynomial h = rng.nonzero_polynomial(ring, 2, 2);
        bool lhs = is_unit_modulo(f * h, {}, ineqs);
        bool rhs = is_unit_modulo(f, {}, ineqs) && is_unit_modulo(h, {}, ineqs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ring_map_kernel: blowup of the plane at the origin") {
    auto base = PolyRing::make({"x", "y"});
    Ideal k = ring_map_kernel(base, {P(base, "x"), P(base, "y")}, {"y1", "y2"});
    auto full = PolyRing::make({"x", "y", "y1", "y2"});
    REQUIRE(k.generators.size() == 1);
    CHECK(substitute(k.generators[0], {}, full).cleared_content() ==
          P(full, "x*y2-y*y1").cleared_content());
}

TEST_CASE("ring_map_kernel: single image has zero kernel") {
    auto base = PolyRing::make({"x", "y"});
    Ideal k = ring_map_kernel(base, {P(base, "x^2+y")}, {"y1"});
    CHECK(k.is_zero());
}

TEST_CASE("fresh_var_name avoids collisions") {
    CHECK(fresh_var_name("w", {"x", "y"}) == "w");
    CHECK(fresh_var_name("w", {"w", "w_"}) == "w__");
}
