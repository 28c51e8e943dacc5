#include <plaincharts/groebner.hpp>

#include <algorithm>
#include <atomic>

namespace plaincharts {

namespace {

std::atomic<int> g_pair_budget{10000};

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Exponents& lf = f.leading_exponents(ord);
    const Exponents& lg = g.leading_exponents(ord);
    Exponents l = lcm_exp(lf, lg);
    Exponents mf(l.size()), mg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        mf[i] = l[i] - lf[i];
        mg[i] = l[i] - lg[i];
    }
    Polynomial a = Polynomial::monomial(f.ring(), mf, Rational(1) / f.leading_coefficient(ord));
    Polynomial b = Polynomial::monomial(g.ring(), mg, Rational(1) / g.leading_coefficient(ord));
    return a * f - b * g;
}

// `steps_left` bounds the division steps across a whole computation: a
// single division can degenerate on adversarial input, so it shares the
// same knob as the pair loop.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const MonomialOrder& ord, long& steps_left) {
    Polynomial p = f;
    Polynomial rem = Polynomial::zero(f.ring());
    while (!p.is_zero()) {
        if (--steps_left < 0)
            throw BudgetExceededError("Groebner reduction step budget exceeded");
        const Exponents& lp = p.leading_exponents(ord);
        bool reduced = false;
        for (const Polynomial& g : gens) {
            const Exponents& lg = g.leading_exponents(ord);
            if (!divides(lg, lp)) continue;
            Exponents m(lp.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = lp[i] - lg[i];
            Rational c = p.coefficient(lp) / g.leading_coefficient(ord);
            p -= Polynomial::monomial(p.ring(), std::move(m), c) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = p.coefficient(lp);
            Polynomial t = Polynomial::monomial(p.ring(), lp, c);
            rem += t;
            p -= t;
        }
    }
    return rem;
}

} // namespace

Ideal Ideal::make(PolyRingPtr ring, std::vector<Polynomial> gens) {
    Ideal ideal;
    ideal.ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!PolyRing::compatible(g.ring(), ideal.ring))
            throw RingMismatchError("ideal generator in wrong ring");
        ideal.generators.push_back(std::move(g));
    }
    return ideal;
}

bool GroebnerBasis::is_unit_ideal() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

int default_pair_budget() { return g_pair_budget.load(); }
void set_default_pair_budget(int budget) { g_pair_budget.store(budget); }

GroebnerBasis buchberger_reduced(const Ideal& ideal, MonomialOrder order,
                                 int pair_budget) {
    if (pair_budget < 0) pair_budget = default_pair_budget();
    long steps_left = 200L * pair_budget;
    std::vector<Polynomial> g;
    for (const auto& gen : ideal.generators) g.push_back(gen.cleared_content());

    struct Pair {
        std::size_t i, j;
        int lcm_degree;
        bool done = false;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Exponents l = lcm_exp(g[i].leading_exponents(order),
                                  g[k].leading_exponents(order));
            pairs.push_back({i, k, total_degree(l), false});
        }
    };
    for (std::size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

    auto pair_processed = [&](std::size_t a, std::size_t b) {
        for (const Pair& p : pairs) {
            std::size_t lo = std::min(a, b), hi = std::max(a, b);
            if (p.i == lo && p.j == hi) return p.done;
        }
        return false;
    };

    int reductions = 0;
    for (;;) {
        // normal selection: smallest lcm degree first
        Pair* next = nullptr;
        for (Pair& p : pairs) {
            if (p.done) continue;
            if (!next || p.lcm_degree < next->lcm_degree) next = &p;
        }
        if (!next) break;
        next->done = true;

        const Exponents& li = g[next->i].leading_exponents(order);
        const Exponents& lj = g[next->j].leading_exponents(order);
        if (coprime(li, lj)) continue; // Buchberger's first criterion
        // chain criterion: a third element whose lead divides the lcm and
        // whose pairs with i and j are already handled
        Exponents l = lcm_exp(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == next->i || k == next->j) continue;
            if (divides(g[k].leading_exponents(order), l) &&
                pair_processed(next->i, k) && pair_processed(next->j, k)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        if (++reductions > pair_budget)
            throw BudgetExceededError("Groebner pair budget exceeded");
        Polynomial s = reduce_full(spoly(g[next->i], g[next->j], order), g, order, steps_left);
        if (!s.is_zero()) {
            g.push_back(s.cleared_content());
            add_pairs_for(g.size() - 1);
        }
    }

    // minimize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Exponents& li = g[i].leading_exponents(order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Exponents& lj = g[j].leading_exponents(order);
            if (divides(lj, li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // fully reduce each element by the others and make monic
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i]
                                      : reduce_full(minimal[i], others, order, steps_left);
        if (r.is_zero()) continue;
        reduced.push_back(r * (Rational(1) / r.leading_coefficient(order)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.less(a.leading_exponents(order), b.leading_exponents(order));
              });
    return {ideal.ring, order, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    if (!PolyRing::compatible(f.ring(), g.ring))
        throw RingMismatchError("normal_form: ring mismatch");
    if (g.basis.empty()) return f;
    long steps_left = 200L * default_pair_budget();
    return reduce_full(f, g.basis, g.order, steps_left);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
    if (!PolyRing::compatible(f.ring(), ideal.ring))
        throw RingMismatchError("ideal_membership: ring mismatch");
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    GroebnerBasis g = buchberger_reduced(ideal, MonomialOrder::grevlex());
    return normal_form(f, g).is_zero();
}

bool ideal_equality(const Ideal& a, const Ideal& b) {
    if (!PolyRing::compatible(a.ring, b.ring))
        throw RingMismatchError("ideal_equality: ring mismatch");
    GroebnerBasis ga = buchberger_reduced(a, MonomialOrder::grevlex());
    GroebnerBasis gb = buchberger_reduced(b, MonomialOrder::grevlex());
    for (const auto& f : a.generators)
        if (!normal_form(f, gb).is_zero()) return false;
    for (const auto& f : b.generators)
        if (!normal_form(f, ga).is_zero()) return false;
    return true;
}

Ideal elimination_ideal(const Ideal& ideal, const std::set<std::string>& drop) {
    const auto& vars = ideal.ring->vars();
    for (const auto& d : drop)
        if (!ideal.ring->has_var(d))
            throw UnknownVariableError("elimination_ideal: unknown variable '" + d + "'");
    if (drop.size() >= vars.size())
        throw ValidationError("elimination_ideal: cannot drop all variables");

    std::vector<std::string> dropped, kept;
    for (const auto& v : vars)
        (drop.count(v) ? dropped : kept).push_back(v);

    std::vector<std::string> reordered = dropped;
    reordered.insert(reordered.end(), kept.begin(), kept.end());
    PolyRingPtr elim_ring = PolyRing::make(
        reordered, MonomialOrder::block(static_cast<int>(dropped.size())));
    PolyRingPtr kept_ring = PolyRing::make(kept);

    std::vector<Polynomial> moved;
    for (const auto& gen : ideal.generators)
        moved.push_back(substitute(gen, {}, elim_ring));
    GroebnerBasis g = buchberger_reduced(Ideal::make(elim_ring, moved),
                                         elim_ring->order());
    std::vector<Polynomial> result;
    for (const auto& b : g.basis) {
        bool uses_dropped = false;
        for (const auto& [e, c] : b.terms()) {
            for (std::size_t i = 0; i < dropped.size(); ++i)
                if (e[i] > 0) uses_dropped = true;
            if (uses_dropped) break;
        }
        if (!uses_dropped) result.push_back(substitute(b, {}, kept_ring));
    }
    return Ideal::make(kept_ring, std::move(result));
}

namespace {

/// Extends the ring by a fresh Rabinowitsch variable and returns the
/// lifted relations plus 1 - w * prod(inequalities).
std::pair<PolyRingPtr, std::vector<Polynomial>>
rabinowitsch_system(const PolyRingPtr& ring,
                    const std::vector<Polynomial>& relations,
                    const std::vector<Polynomial>& inequalities) {
    std::vector<std::string> vars = ring->vars();
    std::string w = fresh_var_name("_w", vars);
    vars.push_back(w);
    PolyRingPtr ext = PolyRing::make(vars);
    std::vector<Polynomial> gens;
    for (const auto& r : relations) gens.push_back(substitute(r, {}, ext));
    Polynomial prod = Polynomial::constant(ext, 1);
    for (const auto& q : inequalities) prod *= substitute(q, {}, ext);
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, w) * prod);
    return {ext, std::move(gens)};
}

} // namespace

bool vanishes_on_localized(const Polynomial& f,
                           const std::vector<Polynomial>& relations,
                           const std::vector<Polynomial>& inequalities) {
    if (f.is_zero()) return true;
    // with no relations the localization of the polynomial ring is still a
    // domain containing it, so only the zero polynomial vanishes
    if (std::all_of(relations.begin(), relations.end(),
                    [](const Polynomial& r) { return r.is_zero(); }))
        return false;
    auto [ext, gens] = rabinowitsch_system(f.ring(), relations, inequalities);
    return ideal_membership(substitute(f, {}, ext), Ideal::make(ext, std::move(gens)));
}

bool is_obviously_unit(const Polynomial& f,
                       const std::vector<Polynomial>& inequalities) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    // a product of powers of the inequalities (times a constant) is a unit
    // by construction
    Polynomial g = f;
    bool progress = true;
    while (progress && !g.is_constant()) {
        progress = false;
        for (const auto& q : inequalities) {
            if (q.is_constant()) continue;
            if (auto quot = exact_divide(g, q)) {
                g = *quot;
                progress = true;
                break;
            }
        }
    }
    return g.is_constant() && !g.is_zero();
}

bool is_unit_modulo(const Polynomial& f,
                    const std::vector<Polynomial>& relations,
                    const std::vector<Polynomial>& inequalities) {
    if (f.is_zero()) return false;
    if (is_obviously_unit(f, inequalities)) return true;
    auto [ext, gens] = rabinowitsch_system(f.ring(), relations, inequalities);
    gens.push_back(substitute(f, {}, ext));
    GroebnerBasis g = buchberger_reduced(Ideal::make(ext, std::move(gens)),
                                         MonomialOrder::grevlex());
    return g.is_unit_ideal();
}

bool localized_ideal_is_unit(const std::vector<Polynomial>& relations,
                             const std::vector<Polynomial>& inequalities,
                             const PolyRingPtr& ring) {
    auto [ext, gens] = rabinowitsch_system(ring, relations, inequalities);
    GroebnerBasis g = buchberger_reduced(Ideal::make(ext, std::move(gens)),
                                         MonomialOrder::grevlex());
    return g.is_unit_ideal();
}

Ideal ring_map_kernel(const PolyRingPtr& base_ring,
                      const std::vector<Polynomial>& images,
                      const std::vector<std::string>& y_names) {
    if (images.size() != y_names.size())
        throw ValidationError("ring_map_kernel: images/names length mismatch");
    for (const auto& a : images) {
        if (!PolyRing::compatible(a.ring(), base_ring))
            throw RingMismatchError("ring_map_kernel: image not in base ring");
    }
    std::vector<std::string> taken = base_ring->vars();
    taken.insert(taken.end(), y_names.begin(), y_names.end());
    std::string t = fresh_var_name("_t", taken);

    std::vector<std::string> vars;
    vars.push_back(t);
    vars.insert(vars.end(), base_ring->vars().begin(), base_ring->vars().end());
    vars.insert(vars.end(), y_names.begin(), y_names.end());
    PolyRingPtr ext = PolyRing::make(vars, MonomialOrder::block(1));

    std::vector<Polynomial> gens;
    Polynomial tv = Polynomial::variable(ext, t);
    for (std::size_t i = 0; i < images.size(); ++i) {
        gens.push_back(Polynomial::variable(ext, y_names[i]) -
                       substitute(images[i], {}, ext) * tv);
    }
    Ideal graph = Ideal::make(ext, std::move(gens));
    return elimination_ideal(graph, {t});
}

std::string fresh_var_name(const std::string& desired,
                           const std::vector<std::string>& taken) {
    std::string name = desired;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

} // namespace plaincharts
