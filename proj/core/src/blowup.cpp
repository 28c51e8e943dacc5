#include <plaincharts/blowup.hpp>
#include <plaincharts/format.hpp>

#include <algorithm>
#include <functional>

namespace plaincharts {

namespace {

std::string ordinal_name(const std::string& base, std::size_t k, std::size_t r) {
    return r == 1 ? base : base + std::to_string(k + 1);
}

} // namespace

ShiftedGenerators shifted_generators(const CenterSpec& center) {
    CenterSpec c = validate_center(center);
    const auto& ring = c.ambient.ring;
    ShiftedGenerators out;
    out.center = c;

    std::vector<Polynomial> v_ineqs;
    for (std::size_t idx : c.subvariety_vars) {
        const std::string& xi = ring->var(idx);
        Polynomial fi = taylor_shift(c.f, c.shift_var, xi);
        Polynomial gi = exact_divide_or_throw(fi - c.f,
                                              Polynomial::variable(ring, xi));
        Polynomial hi = gi - partial_derivative(c.f, c.shift_var);
        out.f_list.push_back(std::move(fi));
        out.g_list.push_back(gi);
        out.h_list.push_back(std::move(hi));
        v_ineqs.push_back(std::move(gi));
    }
    out.neighborhood = v_ineqs.empty()
                           ? c.ambient
                           : c.ambient.restricted(v_ineqs, c.point);
    return out;
}

namespace {

/// Per-chart construction data shared by atlas and transition building.
struct ChartData {
    PolyRingPtr ring;
    std::vector<Polynomial> fraction_vars; // s_k (chart 0) or t_k (chart i)
    Polynomial w;                          // only meaningful for charts >= 1
    Polynomial exceptional;                // f-hat resp. F_i
    std::map<std::string, Polynomial> pullback; // ambient var -> chart poly
    std::vector<Polynomial> g_pullback;    // g_k pulled back to the chart
};

ChartData build_chart_data(const ShiftedGenerators& sg, std::size_t chart_index) {
    const CenterSpec& c = sg.center;
    const auto& amb = c.ambient.ring;
    std::size_t r = c.subvariety_vars.size();
    std::size_t shift = amb->index_of_checked(c.shift_var);

    std::vector<std::string> names = amb->vars();
    ChartData data;
    std::vector<std::string> frac_names(r);
    std::string w_name;
    if (chart_index == 0) {
        for (std::size_t k = 0; k < r; ++k) {
            frac_names[k] = fresh_var_name(ordinal_name("s", k, r), names);
            names[c.subvariety_vars[k]] = frac_names[k];
        }
    } else {
        for (std::size_t k = 0; k < r; ++k) {
            frac_names[k] = fresh_var_name(ordinal_name("t", k, r), names);
            names[c.subvariety_vars[k]] = frac_names[k];
        }
        w_name = fresh_var_name("w", names);
        names[shift] = w_name;
    }
    data.ring = PolyRing::make(names);
    for (std::size_t k = 0; k < r; ++k)
        data.fraction_vars.push_back(Polynomial::variable(data.ring, frac_names[k]));

    if (chart_index == 0) {
        data.exceptional = substitute(c.f, {}, data.ring);
        for (std::size_t k = 0; k < r; ++k)
            data.pullback[amb->var(c.subvariety_vars[k])] =
                data.fraction_vars[k] * data.exceptional;
    } else {
        data.w = Polynomial::variable(data.ring, w_name);
        data.exceptional = substitute(c.f, {{c.shift_var, data.w}}, data.ring);
        for (std::size_t k = 0; k < r; ++k)
            data.pullback[amb->var(c.subvariety_vars[k])] =
                data.fraction_vars[k] * data.exceptional;
        data.pullback[c.shift_var] =
            data.w - data.fraction_vars[chart_index - 1] * data.exceptional;
    }
    for (const auto& g : sg.g_list)
        data.g_pullback.push_back(substitute(g, data.pullback, data.ring));
    return data;
}

RationalPoint chart_sample(const ShiftedGenerators& sg, std::size_t chart_index) {
    const CenterSpec& c = sg.center;
    RationalPoint s = c.point;
    for (std::size_t idx : c.subvariety_vars) s[idx] = 0;
    (void)chart_index; // w sits at the shift position and keeps p's value
    return s;
}

BlowupChart build_chart(const ShiftedGenerators& sg, std::size_t chart_index,
                        const ChartData& data) {
    const CenterSpec& c = sg.center;
    const auto& amb = c.ambient.ring;

    std::vector<Polynomial> ineqs;
    for (const auto& q : sg.neighborhood.inequalities)
        ineqs.push_back(substitute(q, data.pullback, data.ring));

    AffinePatch patch = AffinePatch::make(data.ring, std::move(ineqs),
                                          Ideal::zero(data.ring),
                                          chart_sample(sg, chart_index));

    std::vector<Fraction> comps;
    Polynomial one = Polynomial::constant(data.ring, 1);
    for (std::size_t v = 0; v < amb->arity(); ++v) {
        const std::string& name = amb->var(v);
        auto it = data.pullback.find(name);
        Polynomial num = it != data.pullback.end()
                             ? it->second
                             : Polynomial::variable(data.ring, name);
        comps.push_back({std::move(num), one});
    }
    RationalMap structure =
        RationalMap::make(patch, sg.neighborhood, std::move(comps));
    std::string label =
        chart_index == 0 ? "f" : "f" + std::to_string(chart_index);
    return {std::move(patch), std::move(structure), data.exceptional, label};
}

RationalMap build_transition(const CenterSpec& c, const std::vector<ChartData>& data,
                             const std::vector<BlowupChart>& charts,
                             std::size_t i, std::size_t j) {
    const ChartData& src = data[i];
    const ChartData& dst = data[j];
    std::size_t r = src.fraction_vars.size();
    std::size_t shift = c.ambient.ring->index_of_checked(c.shift_var);
    Polynomial one = Polynomial::constant(src.ring, 1);

    // unit of the overlap: the target generator divided by the source
    // generator, written in source chart coordinates
    Polynomial u;
    if (i == 0) {
        u = one + src.fraction_vars[j - 1] * src.g_pullback[j - 1];
    } else if (j == 0) {
        u = one - src.fraction_vars[i - 1] * src.g_pullback[i - 1];
    } else {
        u = one - src.fraction_vars[i - 1] * src.g_pullback[i - 1] +
            src.fraction_vars[j - 1] * src.g_pullback[j - 1];
    }

    // the source sample has all fraction coordinates zero, so u = 1 there
    AffinePatch overlap = charts[i].patch.restricted({u}, charts[i].patch.sample);

    // components indexed by the target chart's coordinates, which sit at
    // the ambient positions: fractions at subvariety slots, w (or the
    // ambient shifted variable) at the shift slot, ambient names elsewhere
    std::vector<Fraction> comps(dst.ring->arity());
    for (std::size_t v = 0; v < dst.ring->arity(); ++v)
        comps[v] = {Polynomial::variable(src.ring, src.ring->var(v)), one};
    for (std::size_t k = 0; k < r; ++k)
        comps[c.subvariety_vars[k]] = {src.fraction_vars[k], u};
    if (i == 0) {
        // w of the target chart: x_shift + s_j * f-hat
        Polynomial x_shift = Polynomial::variable(src.ring, c.shift_var);
        comps[shift] = {x_shift + src.fraction_vars[j - 1] * src.exceptional, one};
    } else if (j == 0) {
        // the ambient shifted variable: w - t_i * F_i
        comps[shift] = {src.pullback.at(c.shift_var), one};
    } else {
        // w' of the target chart: w + (t_j - t_i) * F_i
        comps[shift] = {src.w + (src.fraction_vars[j - 1] - src.fraction_vars[i - 1]) *
                                    src.exceptional,
                        one};
    }
    return RationalMap::make(std::move(overlap), charts[j].patch, std::move(comps));
}

/// The defining generator whose inversion carves out chart i.
const Polynomial& chart_generator(const ShiftedGenerators& sg, std::size_t i) {
    return i == 0 ? sg.center.f : sg.f_list[i - 1];
}

std::map<std::string, Polynomial> structure_assignment(const BlowupChart& chart,
                                                       const PolyRingPtr& amb) {
    std::map<std::string, Polynomial> assign;
    for (std::size_t v = 0; v < amb->arity(); ++v)
        assign[amb->var(v)] = chart.structure_map.components[v].num;
    return assign;
}

/// Section certificate: the chart coordinates are recovered rationally
/// from the ambient image of the structure map pi,
///   fraction slots: pi[x_k] = t_k * (generator ∘ pi),
///   shift slot:     w = pi[shift] + pi[x_i]  (charts >= 1),
/// as exact identities in the chart's polynomial ring. This makes pi
/// injective wherever the generator is nonzero.
bool section_recovers_chart(const BlowupAtlas& atlas, std::size_t i) {
    const CenterSpec& c = atlas.center;
    const auto& amb = c.ambient.ring;
    const BlowupChart& chart = atlas.charts[i];
    const auto& ring = chart.patch.ring;
    std::size_t shift = amb->index_of_checked(c.shift_var);

    Polynomial gen = substitute(chart_generator(atlas.shifted, i),
                                structure_assignment(chart, amb), ring);
    for (std::size_t k = 0; k < c.subvariety_vars.size(); ++k) {
        std::size_t slot = c.subvariety_vars[k];
        Polynomial tk = Polynomial::variable(ring, ring->var(slot));
        if (chart.structure_map.components[slot].num != tk * gen) return false;
    }
    const Polynomial& at_shift = chart.structure_map.components[shift].num;
    if (i == 0)
        return at_shift == Polynomial::variable(ring, ring->var(shift));
    std::size_t slot_i = c.subvariety_vars[i - 1];
    return Polynomial::variable(ring, ring->var(shift)) ==
           at_shift + chart.structure_map.components[slot_i].num;
}

/// Commutation certificate: pi_j ∘ T_ij = pi_i on the overlap. The chart
/// rings are polynomial rings, hence domains, so equality of the rational
/// functions is exactly vanishing of the cross-multiplied differences.
/// Together with the section certificates this proves the transition
/// pairs mutually inverse without composing them: from
/// pi_i ∘ (T_ji ∘ T_ij) = pi_j ∘ T_ij = pi_i and the section of pi_i,
/// T_ji ∘ T_ij is the identity wherever its denominators are nonzero.
bool transition_commutes(const BlowupAtlas& atlas, int i, int j) {
    const auto& amb = atlas.center.ambient.ring;
    const RationalMap& T = atlas.transitions.at({i, j});
    const BlowupChart& src = atlas.charts[i];
    const BlowupChart& dst = atlas.charts[j];
    const auto& sring = src.patch.ring;

    std::map<std::string, Fraction> assign;
    for (std::size_t v = 0; v < dst.patch.ring->arity(); ++v)
        assign[dst.patch.ring->var(v)] = T.components[v];
    for (std::size_t v = 0; v < amb->arity(); ++v) {
        Fraction lhs =
            substitute_fractions(dst.structure_map.components[v].num, assign, sring);
        if (lhs.num != src.structure_map.components[v].num * lhs.den) return false;
    }
    return true;
}

} // namespace

BlowupAtlas plain_blowup_atlas(const CenterSpec& center) {
    ShiftedGenerators sg = shifted_generators(center);
    const CenterSpec& c = sg.center;
    std::size_t r = c.subvariety_vars.size();

    BlowupAtlas atlas;
    atlas.base = sg.neighborhood;
    atlas.center = c;
    atlas.shifted = sg;

    if (r == 0) {
        // blowing up a hypersurface is an isomorphism: one chart, identity
        BlowupChart chart{atlas.base, RationalMap::identity(atlas.base), c.f, "f"};
        atlas.charts.push_back(std::move(chart));
        return atlas;
    }

    std::vector<ChartData> data;
    for (std::size_t i = 0; i <= r; ++i) data.push_back(build_chart_data(sg, i));
    for (std::size_t i = 0; i <= r; ++i)
        atlas.charts.push_back(build_chart(sg, i, data[i]));

    for (std::size_t i = 0; i <= r; ++i) {
        for (std::size_t j = 0; j <= r; ++j) {
            if (i == j) continue;
            atlas.transitions.emplace(
                std::make_pair(static_cast<int>(i), static_cast<int>(j)),
                build_transition(c, data, atlas.charts, i, j));
        }
    }

    // construction-time invariants: every structure map admits its
    // rational section and commutes with every transition, which together
    // prove the transition pairs mutually inverse
    for (std::size_t i = 0; i <= r; ++i) {
        if (!section_recovers_chart(atlas, i))
            throw ValidationError("chart " + atlas.charts[i].label +
                                  " is not recovered by its rational section");
        for (std::size_t j = 0; j <= r; ++j) {
            if (i == j) continue;
            if (!transition_commutes(atlas, (int)i, (int)j))
                throw ValidationError("transition (" + std::to_string(i) + "," +
                                      std::to_string(j) +
                                      ") does not commute with the structure maps");
        }
    }
    return atlas;
}

RationalMap transition_map(const BlowupAtlas& atlas, int i, int j) {
    if (i == j) return RationalMap::identity(atlas.charts.at(i).patch);
    auto it = atlas.transitions.find({i, j});
    if (it == atlas.transitions.end())
        throw ValidationError("no transition map between the requested charts");
    return it->second;
}

std::vector<ReesChart> rees_charts(const AffinePatch& base,
                                   const std::vector<Polynomial>& generators) {
    if (!base.relations.is_zero())
        throw ValidationError("rees_charts: base must be a patch of affine space");
    for (const auto& a : generators) {
        if (a.is_zero()) throw ValidationError("rees_charts: zero generator");
        if (!PolyRing::compatible(a.ring(), base.ring))
            throw RingMismatchError("rees_charts: generator in wrong ring");
    }
    std::size_t m = generators.size();
    std::vector<std::string> taken = base.ring->vars();
    std::vector<std::string> y_names;
    for (std::size_t i = 0; i < m; ++i) {
        std::string n = fresh_var_name("x" + std::to_string(i + 1), taken);
        y_names.push_back(n);
        taken.push_back(n);
    }
    Ideal kernel = ring_map_kernel(base.ring, generators, y_names);

    std::vector<ReesChart> out;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> chart_vars = base.ring->vars();
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) chart_vars.push_back(y_names[j]);
        PolyRingPtr chart_ring = PolyRing::make(chart_vars);

        // dehomogenize: y_i -> 1, other y_j keep their names
        std::map<std::string, Polynomial> assign{
            {y_names[i], Polynomial::constant(chart_ring, 1)}};
        std::vector<Polynomial> rel_gens;
        MonomialOrder grevlex = MonomialOrder::grevlex();
        for (const auto& g : kernel.generators) {
            Polynomial d = substitute(g, assign, chart_ring);
            if (d.is_zero()) continue;
            rel_gens.push_back(d * Polynomial::constant(
                                       chart_ring,
                                       Rational(1) / d.leading_coefficient(grevlex)));
        }
        Ideal relations = Ideal::make(chart_ring, std::move(rel_gens));

        // witness: a base point with a_i nonzero, lifted by the fractions
        AffinePatch base_probe = base.restricted({generators[i]});
        RationalPoint b = base_probe.sample;
        Rational ai = evaluate(generators[i], b);
        RationalPoint sample = b;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) sample.push_back(evaluate(generators[j], b) / ai);

        std::vector<Polynomial> ineqs;
        for (const auto& q : base.inequalities) ineqs.push_back(substitute(q, {}, chart_ring));
        AffinePatch patch = AffinePatch::make(chart_ring, std::move(ineqs),
                                              relations, sample);

        std::vector<Fraction> comps;
        Polynomial one = Polynomial::constant(chart_ring, 1);
        for (const auto& v : base.ring->vars())
            comps.push_back({Polynomial::variable(chart_ring, v), one});
        RationalMap structure = RationalMap::make(patch, base, std::move(comps));
        out.push_back({std::move(patch), std::move(relations), std::move(structure),
                       "a" + std::to_string(i + 1)});
    }
    return out;
}

namespace {

CheckResult run_check(const std::string& name, const std::function<bool()>& body) {
    try {
        bool ok = body();
        return {name, ok, ok ? "" : "check evaluated to false"};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

} // namespace

bool AtlasReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

AtlasReport verify_atlas(const BlowupAtlas& atlas) {
    AtlasReport report;
    const CenterSpec& c = atlas.center;
    std::size_t r = c.subvariety_vars.size();

    // (a) structure maps land in the base patch
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        const BlowupChart& chart = atlas.charts[i];
        report.checks.push_back(run_check(
            "structure-map-lands-in-base[" + chart.label + "]", [&] {
                RationalPoint image = chart.structure_map.apply(chart.patch.sample);
                if (!atlas.base.contains(image)) return false;
                for (const auto& q : atlas.base.inequalities) {
                    std::map<std::string, Polynomial> assign;
                    for (std::size_t v = 0; v < atlas.base.ring->arity(); ++v)
                        assign[atlas.base.ring->var(v)] =
                            chart.structure_map.components[v].num;
                    if (!is_unit_on_patch(substitute(q, assign, chart.patch.ring),
                                          chart.patch))
                        return false;
                }
                return true;
            }));
    }

    // (b) the center ideal pulls back to the principal exceptional ideal
    std::vector<Polynomial> proof_gens = {c.f};
    for (const auto& fi : atlas.shifted.f_list) proof_gens.push_back(fi);
    Ideal center_shifted = Ideal::make(c.ambient.ring, proof_gens);
    for (const BlowupChart& chart : atlas.charts) {
        report.checks.push_back(run_check(
            "exceptional-principal[" + chart.label + "]", [&] {
                Ideal pulled = pullback_ideal(chart.structure_map, center_shifted);
                Ideal principal =
                    Ideal::make(chart.patch.ring, {chart.exceptional});
                // cheap certificate first: every pullback generator is an
                // exact multiple of the exceptional equation, which itself
                // appears among the generators
                bool cheap = true;
                bool found = false;
                for (const auto& g : pulled.generators) {
                    if (!exact_divide(g, chart.exceptional)) cheap = false;
                    if (g == chart.exceptional) found = true;
                }
                if (cheap && found) return true;
                return ideal_equality_on_patch(pulled, principal, chart.patch);
            }));
    }
    if (r > 0) {
        // certificate that (f, f_1, ..., f_r) = (x_1, ..., x_r, f) on the
        // base: the exact identities f_i = f + x_i g_i with each g_i a unit
        report.checks.push_back(run_check("shifted-generators-generate-center", [&] {
            for (std::size_t k = 0; k < r; ++k) {
                Polynomial xk = Polynomial::variable(
                    c.ambient.ring, c.ambient.ring->var(c.subvariety_vars[k]));
                if (atlas.shifted.f_list[k] - c.f - xk * atlas.shifted.g_list[k] !=
                    Polynomial::zero(c.ambient.ring))
                    return false;
                if (!is_unit_on_patch(atlas.shifted.g_list[k], atlas.base))
                    return false;
            }
            return true;
        }));
    }

    // (c) transition pairs mutually inverse (both composition orders)
    if (r > 0) {
        for (std::size_t i = 0; i <= r; ++i) {
            for (std::size_t j = 0; j <= r; ++j) {
                if (i == j) continue;
                report.checks.push_back(run_check(
                    "transitions-inverse[" + std::to_string(i) + "," +
                        std::to_string(j) + "]",
                    [&] {
                        // both commutation certificates plus the section
                        // of chart i prove T_ji ∘ T_ij = id on the overlap
                        return transition_commutes(atlas, (int)i, (int)j) &&
                               transition_commutes(atlas, (int)j, (int)i) &&
                               section_recovers_chart(atlas, i);
                    }));
            }
        }
    }

    // (d) the proof identities f_i = f + x_i g_i, exactly, in every chart
    for (const BlowupChart& chart : atlas.charts) {
        report.checks.push_back(run_check(
            "proof-identities[" + chart.label + "]", [&] {
                std::map<std::string, Polynomial> assign;
                for (std::size_t v = 0; v < atlas.base.ring->arity(); ++v)
                    assign[atlas.base.ring->var(v)] =
                        chart.structure_map.components[v].num;
                Polynomial fhat = substitute(c.f, assign, chart.patch.ring);
                for (std::size_t k = 0; k < r; ++k) {
                    Polynomial fi =
                        substitute(atlas.shifted.f_list[k], assign, chart.patch.ring);
                    Polynomial gi =
                        substitute(atlas.shifted.g_list[k], assign, chart.patch.ring);
                    Polynomial xi = substitute(
                        Polynomial::variable(c.ambient.ring,
                                             c.ambient.ring->var(c.subvariety_vars[k])),
                        assign, chart.patch.ring);
                    if (fi - fhat - xi * gi != Polynomial::zero(chart.patch.ring))
                        return false;
                }
                return true;
            }));
    }
    return report;
}

} // namespace plaincharts
