#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <plaincharts/projection.hpp>

using namespace plaincharts;
using plaincharts::testing::P;
using plaincharts::testing::Rng;

namespace {

RationalPoint pt(std::initializer_list<int> coords) {
    RationalPoint p;
    for (int c : coords) p.push_back(Rational(c));
    return p;
}

// The twisted cubic (t, t^2, t^3) and its standard projection to the
// (x, z)-plane.
struct CubicFixture {
    PolyRingPtr ring = PolyRing::make({"x", "y", "z"});
    Ideal Z = Ideal::make(ring, {P(ring, "y-x^2"), P(ring, "z-x^3")});
    RationalPoint q = pt({1, 1, 1});

    LinearProjection xz() const {
        LinearProjection p;
        p.matrix = {{Rational(1), Rational(0), Rational(0)},
                    {Rational(0), Rational(0), Rational(1)}};
        return p;
    }
};

// The space curve {y^2 = x^3 - x, z^2 = y^3 - y}, projected to the
// (x, z)-plane. On {x^3 - x - 1 != 0} the middle coordinate is recovered
// as y = z^2 / (x^3 - x - 1).
struct SpaceCurveFixture {
    PolyRingPtr ring = PolyRing::make({"x", "y", "z"});
    Ideal Z = Ideal::make(ring, {P(ring, "y^2-x^3+x"), P(ring, "z^2-y^3+y")});
    RationalPoint q = pt({0, 0, 0});

    LinearProjection xz() const {
        LinearProjection p;
        p.matrix = {{Rational(1), Rational(0), Rational(0)},
                    {Rational(0), Rational(0), Rational(1)}};
        return p;
    }
};

} // namespace

TEST_CASE("matrix_rank: exact Gaussian elimination") {
    using Row = std::vector<Rational>;
    CHECK(matrix_rank({Row{1, 0, 0}, Row{0, 0, 1}}) == 2);
    CHECK(matrix_rank({Row{1, 2}, Row{2, 4}}) == 1);
    CHECK(matrix_rank({Row{0, 0}, Row{0, 0}}) == 0);
    CHECK(matrix_rank(LinearProjection::identity(4).matrix) == 4);
}

TEST_CASE("implicitize: twisted cubic onto the (x, z)-plane") {
    CubicFixture fx;
    Polynomial H = implicitize(fx.Z, fx.xz());
    auto img = H.ring();
    CHECK(img->vars() == std::vector<std::string>{"u1", "u2"});
    // monic generator of the image ideal; equals the classical u2 - u1^3
    // up to the sign fixed by the monic convention
    CHECK(H == P(img, "u1^3-u2"));
}

TEST_CASE("implicitize: identity projection returns the curve's own equation") {
    auto ring = PolyRing::make({"x", "y"});
    Ideal Z = Ideal::make(ring, {P(ring, "y^2-x^3+x")});
    Polynomial H = implicitize(Z, LinearProjection::identity(2));
    CHECK(H == P(H.ring(), "u1^3-u1-u2^2"));
}

TEST_CASE("implicitize: non-principal image is rejected") {
    CubicFixture fx;
    // projecting a curve identically into 3-space is not a hypersurface
    CHECK_THROWS_AS(implicitize(fx.Z, LinearProjection::identity(3)),
                    ValidationError);
}

TEST_CASE("implicitize: space curve matches the hand derivation") {
    SpaceCurveFixture fx;
    Polynomial H = implicitize(fx.Z, fx.xz());
    // from y = u2^2/(u1^3-u1-1) and y^2 = u1^3 - u1:
    // u2^4 = (u1^3-u1) * (u1^3-u1-1)^2, made monic in u1
    CHECK(H == P(H.ring(), "(u1^3-u1)*(u1^3-u1-1)^2-u2^4"));
}

TEST_CASE("implicitize: vanishes on the projected curve points") {
    CubicFixture fx;
    Polynomial H = implicitize(fx.Z, fx.xz());
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        Rational t = rng.rational(6);
        RationalPoint on_curve = {t, t * t, t * t * t};
        CHECK(evaluate(H, fx.xz().apply(on_curve)) == 0);
    }
}

TEST_CASE("local_inverse: twisted cubic recovers y = u1^2") {
    CubicFixture fx;
    RationalMap alpha = local_inverse(fx.Z, fx.xz(), fx.q);
    auto img = alpha.source.ring;
    CHECK(alpha.components[0].num == P(img, "u1"));
    CHECK(alpha.components[0].den == P(img, "1"));
    CHECK(alpha.components[1].num == P(img, "u1^2"));
    CHECK(alpha.components[1].den == P(img, "1"));
    CHECK(alpha.components[2].num == P(img, "u2"));
    // no nonconstant denominators, so the patch is the whole hypersurface
    CHECK(alpha.source.inequalities.empty());
    CHECK(alpha.apply(pt({1, 1})) == fx.q);
}

TEST_CASE("local_inverse: space curve recovers y = u2^2/(u1^3-u1-1)") {
    SpaceCurveFixture fx;
    RationalMap alpha = local_inverse(fx.Z, fx.xz(), fx.q);
    auto img = alpha.source.ring;
    CHECK(alpha.components[0].num == P(img, "u1"));
    CHECK(alpha.components[0].den == P(img, "1"));
    CHECK(alpha.components[1].num == P(img, "u2^2"));
    CHECK(alpha.components[1].den == P(img, "u1^3-u1-1"));
    CHECK(alpha.components[2].num == P(img, "u2"));
    CHECK(alpha.components[2].den == P(img, "1"));
    REQUIRE(alpha.source.inequalities.size() == 1);
    CHECK(alpha.source.inequalities[0] == P(img, "u1^3-u1-1"));
}

TEST_CASE("local_inverse: identity projection is the identity") {
    auto ring = PolyRing::make({"x", "y"});
    Ideal Z = Ideal::make(ring, {P(ring, "y^2-x^3+x")});
    RationalMap alpha = local_inverse(Z, LinearProjection::identity(2), pt({0, 0}));
    auto img = alpha.source.ring;
    CHECK(alpha.components[0].num == P(img, "u1"));
    CHECK(alpha.components[1].num == P(img, "u2"));
    for (const auto& c : alpha.components) CHECK(c.den == P(img, "1"));
}

TEST_CASE("degenerate projection along a secant is rejected") {
    CubicFixture fx;
    // the kernel direction (1, 0, 1) is the secant through (1,1,1) and
    // (-1,1,-1), so both map to (0, 1) and no local inverse exists there
    LinearProjection bad;
    bad.matrix = {{Rational(1), Rational(0), Rational(-1)},
                  {Rational(0), Rational(1), Rational(0)}};
    CHECK(matrix_rank(bad.matrix) == 2);
    CHECK_THROWS_AS(local_inverse(fx.Z, bad, fx.q), ValidationError);
}

TEST_CASE("verify_local_iso: accepted models pass, mutations fail") {
    CubicFixture fx;
    HypersurfaceModel model = hypersurface_model(fx.Z, fx.xz(), fx.q);
    CHECK(model.image_point == pt({1, 1}));
    CHECK(verify_local_iso(fx.Z, fx.xz(), model));

    SpaceCurveFixture sc;
    HypersurfaceModel scm = hypersurface_model(sc.Z, sc.xz(), sc.q);
    CHECK(verify_local_iso(sc.Z, sc.xz(), scm));

    HypersurfaceModel corrupted = model;
    corrupted.inverse.components[1].den =
        P(model.H.ring(), "2"); // wrong but nonvanishing denominator
    CHECK(!verify_local_iso(fx.Z, fx.xz(), corrupted));

    HypersurfaceModel off = model;
    off.image_point = pt({1, 2}); // not on H
    CHECK(!verify_local_iso(fx.Z, fx.xz(), off));
}

TEST_CASE("verify_local_iso: identity model of a plane curve") {
    auto ring = PolyRing::make({"x", "y"});
    Ideal Z = Ideal::make(ring, {P(ring, "y^2-x^3+x")});
    LinearProjection id = LinearProjection::identity(2);
    HypersurfaceModel model = hypersurface_model(Z, id, pt({0, 0}));
    CHECK(verify_local_iso(Z, id, model));
}

TEST_CASE("generic_projection: deterministic and certified") {
    CubicFixture fx;
    LinearProjection a = generic_projection(fx.Z, 1, fx.q, 2024);
    LinearProjection b = generic_projection(fx.Z, 1, fx.q, 2024);
    CHECK(a.matrix == b.matrix);
    CHECK(a.m() == 2);
    CHECK(a.n() == 3);
    CHECK(matrix_rank(a.matrix) == 2);
    HypersurfaceModel model = hypersurface_model(fx.Z, a, fx.q);
    CHECK(verify_local_iso(fx.Z, a, model));

    LinearProjection c = generic_projection(fx.Z, 1, fx.q, 2025);
    CHECK(matrix_rank(c.matrix) == 2);
}

TEST_CASE("generic_projection: hypersurface input returns the identity") {
    auto ring = PolyRing::make({"x", "y"});
    Ideal Z = Ideal::make(ring, {P(ring, "y^2-x^3+x")});
    LinearProjection p = generic_projection(Z, 1, pt({0, 0}), 7);
    CHECK(p.matrix == LinearProjection::identity(2).matrix);
}

TEST_CASE("generic_projection: precondition failures") {
    CubicFixture fx;
    CHECK_THROWS_AS(generic_projection(fx.Z, 1, pt({1, 2, 3}), 1),
                    ValidationError);

    auto ring = PolyRing::make({"x", "y"});
    Ideal node = Ideal::make(ring, {P(ring, "y^2-x^2*(x+1)")});
    // the node at the origin is singular
    CHECK_THROWS_AS(generic_projection(node, 1, pt({0, 0}), 1), ValidationError);
}
