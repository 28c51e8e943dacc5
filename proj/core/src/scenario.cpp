#include <plaincharts/scenario.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace plaincharts {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& msg) {
    throw ValidationError("invalid scenario: " + msg);
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        bad_input(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) bad_input(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const char* what) {
    if (!v.is_array()) bad_input(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) bad_input(std::string(what) + " must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<Polynomial> poly_list(const json& v, const PolyRingPtr& ring,
                                  const char* what) {
    std::vector<Polynomial> out;
    for (const auto& text : string_list(v, what))
        out.push_back(parse_polynomial(text, ring));
    return out;
}

RationalPoint point_from(const json& v, const char* what) {
    RationalPoint p;
    for (const auto& text : string_list(v, what)) p.push_back(parse_rational(text));
    return p;
}

Fraction fraction_from(const json& v, const PolyRingPtr& ring) {
    if (!v.is_object()) bad_input("map component must be an object {num, den}");
    Fraction c;
    c.num = parse_polynomial(string_field(v, "num"), ring);
    c.den = v.contains("den") ? parse_polynomial(string_field(v, "den"), ring)
                              : Polynomial::constant(ring, Rational(1));
    return c;
}

AffinePatch patch_from(const json& v, const MonomialOrder& order) {
    if (!v.is_object()) bad_input("patch must be an object");
    PolyRingPtr ring = PolyRing::make(string_list(field(v, "ring"), "patch ring"), order);
    std::vector<Polynomial> ineqs;
    if (v.contains("inequalities"))
        ineqs = poly_list(v.at("inequalities"), ring, "patch inequalities");
    Ideal relations = Ideal::zero(ring);
    if (v.contains("relations"))
        relations = Ideal::make(ring, poly_list(v.at("relations"), ring, "patch relations"));
    std::optional<RationalPoint> sample;
    if (v.contains("sample")) sample = point_from(v.at("sample"), "patch sample");
    return AffinePatch::make(std::move(ring), std::move(ineqs), std::move(relations),
                             std::move(sample));
}

// ---- serialization --------------------------------------------------------

json polys_json(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_string(p));
    return a;
}

json point_json(const RationalPoint& p) {
    json a = json::array();
    for (const auto& q : p) a.push_back(rational_to_string(q));
    return a;
}

json fraction_json(const Fraction& c) {
    return json{{"num", to_string(c.num)}, {"den", to_string(c.den)}};
}

json patch_json(const AffinePatch& p) {
    return json{{"ring", p.ring->vars()},
                {"inequalities", polys_json(p.inequalities)},
                {"relations", polys_json(p.relations.generators)},
                {"sample", point_json(p.sample)}};
}

json map_json(const RationalMap& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(fraction_json(c));
    return json{{"source", patch_json(m.source)},
                {"target", patch_json(m.target)},
                {"components", comps}};
}

json checks_json(const std::vector<CheckResult>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
}

void append_checks(std::ostringstream& out, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
}

ScenarioResult finish(bool pass, json output, std::ostringstream& text) {
    output["pass"] = pass;
    text << "RESULT " << (pass ? "pass" : "fail") << "\n";
    return ScenarioResult{pass, std::move(output), text.str()};
}

/// Restores the global pair budget on scope exit.
struct BudgetGuard {
    int saved = default_pair_budget();
    explicit BudgetGuard(int budget) {
        if (budget > 0) set_default_pair_budget(budget);
    }
    ~BudgetGuard() { set_default_pair_budget(saved); }
};

// ---- commands -------------------------------------------------------------

ScenarioResult run_blowup(const Scenario& s, const PolyRingPtr& ring) {
    const json& pl = s.payload;
    CenterSpec center;
    RationalPoint point = point_from(field(pl, "point"), "point");
    center.ambient = AffinePatch::make(
        ring,
        pl.contains("inequalities")
            ? poly_list(pl.at("inequalities"), ring, "ambient inequalities")
            : std::vector<Polynomial>{},
        Ideal::zero(ring), point);
    for (const auto& name : string_list(field(pl, "subvariety_vars"), "subvariety_vars"))
        center.subvariety_vars.push_back(ring->index_of_checked(name));
    center.f = parse_polynomial(string_field(pl, "f"), ring);
    center.point = std::move(point);
    center.shift_var = string_field(pl, "shift_var");

    BlowupAtlas atlas = plain_blowup_atlas(center);
    AtlasReport report = verify_atlas(atlas);

    json charts = json::array();
    for (const auto& ch : atlas.charts) {
        json comps = json::array();
        for (const auto& c : ch.structure_map.components) comps.push_back(fraction_json(c));
        charts.push_back(json{{"label", ch.label},
                              {"patch", patch_json(ch.patch)},
                              {"exceptional", to_string(ch.exceptional)},
                              {"structure_map", comps}});
    }
    json transitions = json::array();
    for (const auto& [key, map] : atlas.transitions)
        transitions.push_back(json{{"from", key.first}, {"to", key.second},
                                   {"map", map_json(map)}});

    json out{{"command", "blowup"},
             {"base", patch_json(atlas.base)},
             {"neighborhood", patch_json(atlas.shifted.neighborhood)},
             {"shifted", json{{"f_list", polys_json(atlas.shifted.f_list)},
                              {"g_list", polys_json(atlas.shifted.g_list)},
                              {"h_list", polys_json(atlas.shifted.h_list)}}},
             {"charts", charts},
             {"transitions", transitions},
             {"checks", checks_json(report.checks)}};

    std::ostringstream text;
    text << "blowup atlas with " << atlas.charts.size() << " charts\n";
    for (const auto& ch : atlas.charts) {
        text << "chart " << ch.label << ": ring (";
        for (std::size_t i = 0; i < ch.patch.ring->arity(); ++i)
            text << (i ? ", " : "") << ch.patch.ring->var(i);
        text << "), exceptional " << to_string(ch.exceptional) << "\n";
        for (const auto& q : ch.patch.inequalities)
            text << "  inequality " << to_string(q) << " != 0\n";
    }
    append_checks(text, report.checks);
    return finish(report.all_pass(), std::move(out), text);
}

ScenarioResult run_rees(const Scenario& s, const PolyRingPtr& ring) {
    const json& pl = s.payload;
    std::vector<Polynomial> ineqs;
    if (pl.contains("inequalities"))
        ineqs = poly_list(pl.at("inequalities"), ring, "base inequalities");
    Ideal relations = Ideal::zero(ring);
    if (pl.contains("relations"))
        relations = Ideal::make(ring, poly_list(pl.at("relations"), ring, "base relations"));
    std::optional<RationalPoint> sample;
    if (pl.contains("sample")) sample = point_from(pl.at("sample"), "base sample");
    AffinePatch base = AffinePatch::make(ring, std::move(ineqs), std::move(relations),
                                         std::move(sample));
    std::vector<Polynomial> gens =
        poly_list(field(pl, "generators"), ring, "generators");

    std::vector<ReesChart> charts = rees_charts(base, gens);

    std::vector<CheckResult> checks;
    json chart_arr = json::array();
    for (const auto& ch : charts) {
        json comps = json::array();
        for (const auto& c : ch.structure_map.components) comps.push_back(fraction_json(c));
        chart_arr.push_back(json{{"label", ch.label},
                                 {"patch", patch_json(ch.patch)},
                                 {"relations", polys_json(ch.relations.generators)},
                                 {"structure_map", comps}});
        checks.push_back({"witness-on-chart[" + ch.label + "]",
                          ch.patch.contains(ch.patch.sample), ""});
        checks.push_back({"structure-map-lands-in-base[" + ch.label + "]",
                          base.contains(ch.structure_map.apply(ch.patch.sample)), ""});
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;

    json out{{"command", "rees"},
             {"base", patch_json(base)},
             {"generators", polys_json(gens)},
             {"charts", chart_arr},
             {"checks", checks_json(checks)}};

    std::ostringstream text;
    text << "rees presentation with " << charts.size() << " charts\n";
    for (const auto& ch : charts) {
        text << "chart " << ch.label << ": ring (";
        for (std::size_t i = 0; i < ch.patch.ring->arity(); ++i)
            text << (i ? ", " : "") << ch.patch.ring->var(i);
        text << ")\n";
        for (const auto& r : ch.relations.generators)
            text << "  relation " << to_string(r) << " = 0\n";
    }
    append_checks(text, checks);
    return finish(pass, std::move(out), text);
}

ScenarioResult run_member(const Scenario& s, const PolyRingPtr& ring) {
    const json& pl = s.payload;
    Polynomial f = parse_polynomial(string_field(pl, "f"), ring);
    Ideal ideal = Ideal::make(ring, poly_list(field(pl, "generators"), ring, "generators"));

    GroebnerBasis gb = buchberger_reduced(ideal, s.order);
    Polynomial nf = normal_form(f, gb);
    bool member = nf.is_zero();

    json out{{"command", "member"},
             {"f", to_string(f)},
             {"generators", polys_json(ideal.generators)},
             {"groebner_basis", polys_json(gb.basis)},
             {"normal_form", to_string(nf)},
             {"member", member}};

    std::ostringstream text;
    text << "normal form: " << to_string(nf) << "\n";
    text << (member ? "PASS " : "FAIL ") << "ideal-membership\n";
    return finish(member, std::move(out), text);
}

ScenarioResult run_verify_map(const Scenario& s) {
    const json& pl = s.payload;
    AffinePatch source = patch_from(field(pl, "source"), s.order);
    AffinePatch target = patch_from(field(pl, "target"), s.order);

    std::vector<Fraction> fwd_comps;
    for (const auto& c : field(pl, "forward")) fwd_comps.push_back(fraction_from(c, source.ring));
    RationalMap forward = RationalMap::make(source, target, std::move(fwd_comps));

    std::vector<CheckResult> checks;
    json out{{"command", "verify-map"}, {"forward", map_json(forward)}};

    if (pl.contains("inverse")) {
        std::vector<Fraction> inv_comps;
        for (const auto& c : pl.at("inverse")) inv_comps.push_back(fraction_from(c, target.ring));
        RationalMap inverse = RationalMap::make(target, source, std::move(inv_comps));
        out["inverse"] = map_json(inverse);

        bool on_source =
            map_equal_on_patch(compose(inverse, forward), RationalMap::identity(source));
        checks.push_back({"inverse-after-forward-is-identity", on_source, ""});
        bool on_target =
            map_equal_on_patch(compose(forward, inverse), RationalMap::identity(target));
        checks.push_back({"forward-after-inverse-is-identity", on_target, ""});
    } else {
        checks.push_back({"map-well-defined", true, ""});
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    out["checks"] = checks_json(checks);

    std::ostringstream text;
    append_checks(text, checks);
    return finish(pass, std::move(out), text);
}

ScenarioResult run_project(const Scenario& s, const PolyRingPtr& ring) {
    const json& pl = s.payload;
    Ideal Z = Ideal::make(ring, poly_list(field(pl, "generators"), ring, "generators"));
    const json& dim = field(pl, "dim");
    if (!dim.is_number_integer()) bad_input("field 'dim' must be an integer");
    RationalPoint q = point_from(field(pl, "point"), "point");

    LinearProjection proj = generic_projection(Z, dim.get<int>(), q, s.seed);
    HypersurfaceModel model = hypersurface_model(Z, proj, q);
    bool certified = verify_local_iso(Z, proj, model);

    json matrix = json::array();
    for (const auto& row : proj.matrix) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rational_to_string(e));
        matrix.push_back(r);
    }
    json out{{"command", "project"},
             {"matrix", matrix},
             {"H", to_string(model.H)},
             {"image_ring", model.H.ring()->vars()},
             {"inverse", map_json(model.inverse)},
             {"base_point", point_json(model.base_point)},
             {"image_point", point_json(model.image_point)},
             {"checks", checks_json({{"local-isomorphism-certified", certified, ""}})}};

    std::ostringstream text;
    text << "hypersurface H: " << to_string(model.H) << "\n";
    text << (certified ? "PASS " : "FAIL ") << "local-isomorphism-certified\n";
    return finish(certified, std::move(out), text);
}

} // namespace

Scenario parse_scenario(const json& doc) {
    if (!doc.is_object()) bad_input("top-level document must be an object");
    Scenario s;
    s.ring_vars = string_list(field(doc, "ring"), "ring");
    if (s.ring_vars.empty()) bad_input("ring must declare at least one variable");
    s.command = string_field(doc, "command");
    static const std::vector<std::string> known = {"blowup", "rees", "project",
                                                   "verify-map", "member"};
    if (std::find(known.begin(), known.end(), s.command) == known.end())
        bad_input("unknown command '" + s.command + "'");
    s.payload = field(doc, "payload");
    if (doc.contains("options")) {
        const json& opt = doc.at("options");
        if (!opt.is_object()) bad_input("options must be an object");
        if (opt.contains("order")) {
            std::string o = string_field(opt, "order");
            if (o == "grevlex")
                s.order = MonomialOrder::grevlex();
            else if (o == "lex")
                s.order = MonomialOrder::lex();
            else
                bad_input("order must be 'grevlex' or 'lex'");
        }
        if (opt.contains("seed")) s.seed = opt.at("seed").get<std::uint64_t>();
        if (opt.contains("budget")) {
            s.budget = opt.at("budget").get<int>();
            if (s.budget <= 0) bad_input("budget must be positive");
        }
    }
    return s;
}

Scenario parse_scenario_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what(), 0, 0,
                         "JSON document");
    }
    return parse_scenario(doc);
}

ScenarioResult run_scenario(const Scenario& s) {
    BudgetGuard guard(s.budget);
    PolyRingPtr ring = PolyRing::make(s.ring_vars, s.order);
    if (s.command == "blowup") return run_blowup(s, ring);
    if (s.command == "rees") return run_rees(s, ring);
    if (s.command == "member") return run_member(s, ring);
    if (s.command == "verify-map") return run_verify_map(s);
    if (s.command == "project") return run_project(s, ring);
    bad_input("unknown command '" + s.command + "'");
}

std::string structured_text(const ScenarioResult& r) {
    return r.output.dump(2) + "\n";
}

} // namespace plaincharts
