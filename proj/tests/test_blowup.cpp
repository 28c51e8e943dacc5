#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <plaincharts/blowup.hpp>

using namespace plaincharts;
using plaincharts::testing::P;
using plaincharts::testing::Rng;

namespace {

RationalPoint pt(std::initializer_list<int> coords) {
    RationalPoint p;
    for (int c : coords) p.push_back(Rational(c));
    return p;
}

// Blowup of the elliptic curve Z = {z = 0, x - x^3 + y^2 = 0} at the
// origin of affine 3-space, with x as the shifted direction. All golden
// values below were worked out by hand from the shift construction.
CenterSpec elliptic_center() {
    auto ring = PolyRing::make({"x", "y", "z"});
    return {AffinePatch::full(ring), {2}, P(ring, "x-x^3+y^2"), pt({0, 0, 0}), "x"};
}

} // namespace

TEST_CASE("shifted_generators: elliptic center goldens") {
    ShiftedGenerators sg = shifted_generators(elliptic_center());
    auto ring = sg.center.ambient.ring;
    REQUIRE(sg.f_list.size() == 1);

    CHECK(sg.f_list[0] == P(ring, "(x+z)-(x+z)^3+y^2"));
    CHECK(sg.g_list[0] == P(ring, "1-3*x^2-3*x*z-z^2"));
    CHECK(sg.h_list[0] == P(ring, "-3*x*z-z^2"));

    // the defining identity f_1 = f + z*g_1, exactly
    CHECK(sg.f_list[0] == sg.center.f + P(ring, "z") * sg.g_list[0]);
    // h vanishes at the base point, so g is invertible near it
    CHECK(evaluate(sg.h_list[0], sg.center.point) == 0);
    CHECK(evaluate(sg.g_list[0], sg.center.point) == 1);

    REQUIRE(sg.neighborhood.inequalities.size() == 1);
    CHECK(sg.neighborhood.inequalities[0] == sg.g_list[0]);
    CHECK(sg.neighborhood.sample == sg.center.point);
}

TEST_CASE("plain_blowup_atlas: elliptic chart goldens") {
    BlowupAtlas atlas = plain_blowup_atlas(elliptic_center());
    REQUIRE(atlas.charts.size() == 2);

    const BlowupChart& c0 = atlas.charts[0];
    const BlowupChart& c1 = atlas.charts[1];
    CHECK(c0.label == "f");
    CHECK(c1.label == "f1");
    CHECK(c0.patch.ring->vars() == std::vector<std::string>{"x", "y", "s"});
    CHECK(c1.patch.ring->vars() == std::vector<std::string>{"w", "y", "t"});

    auto r0 = c0.patch.ring;
    auto r1 = c1.patch.ring;
    CHECK(c0.exceptional == P(r0, "x-x^3+y^2"));
    CHECK(c1.exceptional == P(r1, "w-w^3+y^2"));

    // chart inequalities: the pullback of g = 1 - 3x^2 - 3xz - z^2
    REQUIRE(c0.patch.inequalities.size() == 1);
    CHECK(c0.patch.inequalities[0] ==
          P(r0, "1-3*x^2-3*x*s*(x-x^3+y^2)-s^2*(x-x^3+y^2)^2"));
    REQUIRE(c1.patch.inequalities.size() == 1);
    CHECK(c1.patch.inequalities[0] ==
          P(r1, "1-3*w^2+3*w*t*(w-w^3+y^2)-t^2*(w-w^3+y^2)^2"));

    // structure maps (denominators all 1)
    CHECK(c0.structure_map.components[0].num == P(r0, "x"));
    CHECK(c0.structure_map.components[1].num == P(r0, "y"));
    CHECK(c0.structure_map.components[2].num == P(r0, "s*(x-x^3+y^2)"));
    CHECK(c1.structure_map.components[0].num == P(r1, "w-t*(w-w^3+y^2)"));
    CHECK(c1.structure_map.components[1].num == P(r1, "y"));
    CHECK(c1.structure_map.components[2].num == P(r1, "t*(w-w^3+y^2)"));
    for (const BlowupChart* c : {&c0, &c1})
        for (const auto& comp : c->structure_map.components)
            CHECK(comp.den == Polynomial::constant(c->patch.ring, 1));

    // both chart samples sit over the base point
    CHECK(c0.structure_map.apply(c0.patch.sample) == pt({0, 0, 0}));
    CHECK(c1.structure_map.apply(c1.patch.sample) == pt({0, 0, 0}));
}

TEST_CASE("plain_blowup_atlas: elliptic transition goldens") {
    BlowupAtlas atlas = plain_blowup_atlas(elliptic_center());
    auto r0 = atlas.charts[0].patch.ring;
    auto r1 = atlas.charts[1].patch.ring;

    RationalMap t01 = transition_map(atlas, 0, 1);
    Polynomial u01 = P(r0, "1+s-3*x^2*s-3*x*s^2*(x-x^3+y^2)-s^3*(x-x^3+y^2)^2");
    REQUIRE(t01.source.inequalities.size() == 2);
    CHECK(t01.source.inequalities[1] == u01);
    CHECK(t01.components[0].num == P(r0, "x+x*s-x^3*s+y^2*s"));
    CHECK(t01.components[0].den == P(r0, "1"));
    CHECK(t01.components[1].num == P(r0, "y"));
    CHECK(t01.components[2].num == P(r0, "s"));
    CHECK(t01.components[2].den == u01);

    RationalMap t10 = transition_map(atlas, 1, 0);
    Polynomial u10 = P(r1, "1-t+3*w^2*t-3*w*t^2*(w-w^3+y^2)+t^3*(w-w^3+y^2)^2");
    REQUIRE(t10.source.inequalities.size() == 2);
    CHECK(t10.source.inequalities[1] == u10);
    CHECK(t10.components[0].num == P(r1, "w-t*(w-w^3+y^2)"));
    CHECK(t10.components[1].num == P(r1, "y"));
    CHECK(t10.components[2].num == P(r1, "t"));
    CHECK(t10.components[2].den == u10);

    // i == j is the identity; absent pairs are rejected
    CHECK(map_equal_on_patch(transition_map(atlas, 0, 0),
                             RationalMap::identity(atlas.charts[0].patch)));
    CHECK_THROWS_AS(transition_map(atlas, 0, 2), ValidationError);
}

TEST_CASE("transition maps commute with the structure maps") {
    BlowupAtlas atlas = plain_blowup_atlas(elliptic_center());
    for (auto [ij, t] : atlas.transitions) {
        RationalMap via_target = compose(atlas.charts[ij.second].structure_map, t);
        // the source structure map, restricted to the overlap
        const RationalMap& down = atlas.charts[ij.first].structure_map;
        RationalMap restricted =
            RationalMap::make(t.source, down.target, down.components);
        CHECK(map_equal_on_patch(via_target, restricted));
    }
}

TEST_CASE("verify_atlas: elliptic atlas passes every check") {
    BlowupAtlas atlas = plain_blowup_atlas(elliptic_center());
    AtlasReport report = verify_atlas(atlas);
    CHECK(report.all_pass());
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("verify_atlas: corrupted atlases are reported, not thrown") {
    BlowupAtlas atlas = plain_blowup_atlas(elliptic_center());

    // corruption destroys the certificates that keep verification cheap, so
    // run with a small pair budget: the checks then fail either by refutation
    // or by a recorded budget overrun, never by an escaping exception
    int saved = default_pair_budget();
    set_default_pair_budget(200);

    BlowupAtlas bad_transition = atlas;
    auto& t = bad_transition.transitions.at({0, 1});
    t.components[0].num += P(atlas.charts[0].patch.ring, "s^2");
    AtlasReport r1 = verify_atlas(bad_transition);
    CHECK(!r1.all_pass());

    BlowupAtlas bad_exceptional = atlas;
    bad_exceptional.charts[0].exceptional += P(atlas.charts[0].patch.ring, "y");
    AtlasReport r2 = verify_atlas(bad_exceptional);
    set_default_pair_budget(saved);
    CHECK(!r2.all_pass());
}

TEST_CASE("blowing up a hypersurface center (r = 0) is an isomorphism") {
    auto ring = PolyRing::make({"x", "y"});
    CenterSpec c{AffinePatch::full(ring), {}, P(ring, "x-x^3+y^2"), pt({0, 0}), "x"};
    BlowupAtlas atlas = plain_blowup_atlas(c);
    REQUIRE(atlas.charts.size() == 1);
    CHECK(atlas.transitions.empty());
    CHECK(map_equal_on_patch(atlas.charts[0].structure_map,
                             RationalMap::identity(atlas.base)));
    CHECK(verify_atlas(atlas).all_pass());
}

TEST_CASE("coordinate-axis center: blowup of {x = z = 0} with f = x") {
    auto ring = PolyRing::make({"x", "y", "z"});
    CenterSpec c{AffinePatch::full(ring), {2}, P(ring, "x"), pt({0, 0, 0}), "x"};
    ShiftedGenerators sg = shifted_generators(c);
    CHECK(sg.g_list[0] == P(ring, "1"));
    // g = 1 is dropped as a constant inequality: V is all of affine space
    CHECK(sg.neighborhood.inequalities.empty());

    BlowupAtlas atlas = plain_blowup_atlas(c);
    auto r0 = atlas.charts[0].patch.ring;
    auto r1 = atlas.charts[1].patch.ring;
    CHECK(atlas.charts[0].structure_map.components[2].num == P(r0, "s*x"));
    CHECK(atlas.charts[1].structure_map.components[0].num == P(r1, "w-t*w"));
    CHECK(atlas.charts[1].structure_map.components[2].num == P(r1, "t*w"));

    RationalMap t01 = transition_map(atlas, 0, 1);
    CHECK(t01.components[0].num == P(r0, "x+x*s"));
    CHECK(t01.components[2].num == P(r0, "s"));
    CHECK(t01.components[2].den == P(r0, "1+s"));
    CHECK(verify_atlas(atlas).all_pass());
}

TEST_CASE("plain_blowup_atlas: codimension-3 center with two fractions") {
    auto ring = PolyRing::make({"x", "y", "z", "v"});
    CenterSpec c{AffinePatch::full(ring), {2, 3}, P(ring, "x+y^2-x^2*y"),
                 pt({0, 0, 0, 0}), "x"};
    BlowupAtlas atlas = plain_blowup_atlas(c);
    REQUIRE(atlas.charts.size() == 3);
    CHECK(atlas.charts[0].patch.ring->vars() ==
          std::vector<std::string>{"x", "y", "s1", "s2"});
    CHECK(atlas.charts[1].patch.ring->vars() ==
          std::vector<std::string>{"w", "y", "t1", "t2"});
    CHECK(atlas.transitions.size() == 6);
    CHECK(verify_atlas(atlas).all_pass());
}

TEST_CASE("verify_atlas holds for random smooth centers") {
    auto ring = PolyRing::make({"x", "y", "z"});
    auto sub = PolyRing::make({"x", "y"});
    Rng rng(53);
    int done = 0;
    while (done < 10) {
        Polynomial q = rng.polynomial(sub, 3, 4);
        Polynomial f = substitute(q, {}, ring);
        f -= Polynomial::constant(ring, evaluate(f, pt({0, 0, 0})));
        // force a unit shift partial at the origin
        Rational dx = evaluate(partial_derivative(f, "x"), pt({0, 0, 0}));
        f += Polynomial::constant(ring, Rational(1) - dx) *
             Polynomial::variable(ring, "x");
        CenterSpec c{AffinePatch::full(ring), {2}, f, pt({0, 0, 0}), "x"};
        BlowupAtlas atlas = plain_blowup_atlas(c);
        CHECK(verify_atlas(atlas).all_pass());
        ++done;
    }
}

TEST_CASE("rees_charts: blowup of the plane at the origin") {
    auto ring = PolyRing::make({"x", "y"});
    AffinePatch plane = AffinePatch::full(ring);
    auto charts = rees_charts(plane, {P(ring, "x"), P(ring, "y")});
    REQUIRE(charts.size() == 2);

    CHECK(charts[0].label == "a1");
    CHECK(charts[0].patch.ring->vars() == std::vector<std::string>{"x", "y", "x2"});
    REQUIRE(charts[0].relations.generators.size() == 1);
    CHECK(charts[0].relations.generators[0] ==
          P(charts[0].patch.ring, "x*x2-y"));

    CHECK(charts[1].patch.ring->vars() == std::vector<std::string>{"x", "y", "x1"});
    REQUIRE(charts[1].relations.generators.size() == 1);
    CHECK(charts[1].relations.generators[0] ==
          P(charts[1].patch.ring, "y*x1-x"));

    for (const auto& c : charts) {
        CHECK(c.patch.contains(c.patch.sample));
        CHECK(plane.contains(c.structure_map.apply(c.patch.sample)));
    }
}

TEST_CASE("rees_charts: validation of the base and generators") {
    auto ring = PolyRing::make({"x", "y"});
    AffinePatch plane = AffinePatch::full(ring);
    CHECK_THROWS_AS(rees_charts(plane, {Polynomial::zero(ring)}), ValidationError);

    AffinePatch curve = AffinePatch::make(ring, {}, Ideal::make(ring, {P(ring, "y")}),
                                          pt({0, 0}));
    CHECK_THROWS_AS(rees_charts(curve, {P(ring, "x")}), ValidationError);
}

TEST_CASE("rees_charts: fresh chart names avoid ambient collisions") {
    auto ring = PolyRing::make({"x1", "x2"});
    AffinePatch plane = AffinePatch::full(ring);
    auto charts = rees_charts(plane, {P(ring, "x1"), P(ring, "x2")});
    REQUIRE(charts.size() == 2);
    CHECK(charts[0].patch.ring->vars() ==
          std::vector<std::string>{"x1", "x2", "x2_"});
    CHECK(charts[1].patch.ring->vars() ==
          std::vector<std::string>{"x1", "x2", "x1_"});
}
