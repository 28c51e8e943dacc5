#include <plaincharts/format.hpp>
#include <plaincharts/geometry.hpp>

#include <algorithm>
#include <random>

namespace plaincharts {

namespace {

bool point_ok(const RationalPoint& p, const std::vector<Polynomial>& ineqs,
              const Ideal& relations) {
    for (const auto& q : ineqs)
        if (evaluate(q, p) == 0) return false;
    for (const auto& r : relations.generators)
        if (evaluate(r, p) != 0) return false;
    return true;
}

// Bounded search over small-denominator rationals in [-10, 10].
std::optional<RationalPoint> find_sample(const PolyRingPtr& ring,
                                         const std::vector<Polynomial>& ineqs,
                                         const Ideal& relations,
                                         const RationalPoint* hint) {
    std::size_t n = ring->arity();
    RationalPoint origin(n, Rational(0));
    if (hint && point_ok(*hint, ineqs, relations)) return *hint;
    if (point_ok(origin, ineqs, relations)) return origin;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 8);
    for (int trial = 0; trial < 10000; ++trial) {
        RationalPoint p;
        p.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            p.push_back(q);
        }
        if (point_ok(p, ineqs, relations)) return p;
    }
    return std::nullopt;
}

std::vector<Polynomial> simplify_inequalities(std::vector<Polynomial> ineqs) {
    std::vector<Polynomial> out;
    for (auto& q : ineqs) {
        if (q.is_zero()) throw ValidationError("zero inequality polynomial");
        if (q.is_constant()) continue;
        bool dup = false;
        for (const auto& seen : out)
            if (seen == q) dup = true;
        if (!dup) out.push_back(std::move(q));
    }
    return out;
}

} // namespace

AffinePatch AffinePatch::make(PolyRingPtr ring, std::vector<Polynomial> inequalities,
                              Ideal relations, std::optional<RationalPoint> sample) {
    for (const auto& q : inequalities)
        if (!PolyRing::compatible(q.ring(), ring))
            throw RingMismatchError("patch inequality in wrong ring");
    if (!PolyRing::compatible(relations.ring, ring))
        throw RingMismatchError("patch relations in wrong ring");
    inequalities = simplify_inequalities(std::move(inequalities));

    AffinePatch p;
    p.ring = std::move(ring);
    p.inequalities = std::move(inequalities);
    p.relations = std::move(relations);
    if (sample) {
        if (sample->size() != p.ring->arity())
            throw ValidationError("sample point arity mismatch");
        if (!point_ok(*sample, p.inequalities, p.relations))
            throw ValidationError("sample point does not lie on the patch");
        p.sample = std::move(*sample);
    } else {
        auto found = find_sample(p.ring, p.inequalities, p.relations, nullptr);
        if (!found)
            throw ValidationError("no rational witness point found for patch");
        p.sample = std::move(*found);
    }
    return p;
}

AffinePatch AffinePatch::full(PolyRingPtr ring) {
    Ideal none = Ideal::zero(ring);
    return make(std::move(ring), {}, std::move(none));
}

AffinePatch AffinePatch::restricted(const std::vector<Polynomial>& extra,
                                    std::optional<RationalPoint> s) const {
    std::vector<Polynomial> ineqs = inequalities;
    ineqs.insert(ineqs.end(), extra.begin(), extra.end());
    ineqs = simplify_inequalities(std::move(ineqs));
    if (!s) {
        auto found = find_sample(ring, ineqs, relations, &sample);
        if (!found)
            throw ValidationError("no rational witness point found for restricted patch");
        s = std::move(found);
    }
    return make(ring, std::move(ineqs), relations, std::move(s));
}

bool AffinePatch::contains(const RationalPoint& p) const {
    if (p.size() != ring->arity()) return false;
    return point_ok(p, inequalities, relations);
}

bool is_unit_on_patch(const Polynomial& f, const AffinePatch& patch,
                      const Ideal* modulo) {
    if (!PolyRing::compatible(f.ring(), patch.ring))
        throw RingMismatchError("is_unit_on_patch: ring mismatch");
    std::vector<Polynomial> relations = patch.relations.generators;
    if (modulo)
        relations.insert(relations.end(), modulo->generators.begin(),
                         modulo->generators.end());
    return is_unit_modulo(f, relations, patch.inequalities);
}

RationalMap RationalMap::make(AffinePatch source, AffinePatch target,
                              std::vector<Fraction> components) {
    if (components.size() != target.ring->arity())
        throw ValidationError("rational map arity does not match target ring");
    for (const auto& [num, den] : components) {
        if (!PolyRing::compatible(num.ring(), source.ring) ||
            !PolyRing::compatible(den.ring(), source.ring))
            throw RingMismatchError("rational map component in wrong ring");
        if (den.is_zero()) throw ValidationError("zero denominator in rational map");
    }
    RationalMap m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.components = std::move(components);

    for (const auto& [num, den] : m.components) {
        if (!is_unit_on_patch(den, m.source))
            throw ValidationError("rational map denominator '" + to_string(den) +
                                  "' is not a unit on the source patch");
    }
    RationalPoint image = m.apply(m.source.sample);
    if (!m.target.contains(image))
        throw ValidationError("rational map does not carry the source sample "
                              "point into the target patch");
    return m;
}

RationalMap RationalMap::identity(const AffinePatch& patch) {
    std::vector<Fraction> comps;
    Polynomial one = Polynomial::constant(patch.ring, 1);
    for (const auto& v : patch.ring->vars())
        comps.push_back({Polynomial::variable(patch.ring, v), one});
    return make(patch, patch, std::move(comps));
}

RationalPoint RationalMap::apply(const RationalPoint& p) const {
    RationalPoint out;
    out.reserve(components.size());
    for (const auto& [num, den] : components) {
        Rational d = evaluate(den, p);
        if (d == 0) throw ValidationError("rational map denominator vanishes at point");
        out.push_back(evaluate(num, p) / d);
    }
    return out;
}

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    if (!PolyRing::compatible(f.target.ring, g.source.ring))
        throw ValidationError("compose: inner target and outer source disagree");

    std::map<std::string, Fraction> assign;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        assign[f.target.ring->var(i)] = f.components[i];

    std::vector<Fraction> comps;
    std::vector<Polynomial> new_denominators;
    for (const auto& [num, den] : g.components) {
        Fraction n = substitute_fractions(num, assign, f.source.ring);
        Fraction d = substitute_fractions(den, assign, f.source.ring);
        // (n.num/n.den) / (d.num/d.den)
        Fraction c{n.num * d.den, n.den * d.num};
        if (c.den.is_zero())
            throw ValidationError("compose: denominator vanishes identically");
        comps.push_back(c);
        // restricting by a denominator that is in fact a unit leaves the
        // patch unchanged as a set, so the cheap unit test suffices here
        if (!is_obviously_unit(c.den, f.source.inequalities))
            new_denominators.push_back(c.den);
    }
    AffinePatch source =
        new_denominators.empty() ? f.source : f.source.restricted(new_denominators);
    return RationalMap::make(std::move(source), g.target, std::move(comps));
}

bool map_equal_on_patch(const RationalMap& f, const RationalMap& g) {
    if (!PolyRing::compatible(f.source.ring, g.source.ring) ||
        !PolyRing::compatible(f.target.ring, g.target.ring))
        throw RingMismatchError("map_equal_on_patch: ring mismatch");
    if (f.components.size() != g.components.size()) return false;
    // fast numeric pre-check at the sample point
    if (f.source.contains(g.source.sample) && g.source.contains(f.source.sample)) {
        if (f.apply(f.source.sample) != g.apply(f.source.sample)) return false;
    }
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        Polynomial d = f.components[i].num * g.components[i].den -
                       g.components[i].num * f.components[i].den;
        if (d.is_zero()) continue;
        std::vector<Polynomial> ineqs = f.source.inequalities;
        ineqs.push_back(f.components[i].den);
        ineqs.push_back(g.components[i].den);
        if (!vanishes_on_localized(d, f.source.relations.generators, ineqs))
            return false;
    }
    return true;
}

std::vector<std::vector<Polynomial>> jacobian(const Ideal& ideal,
                                              const std::vector<std::string>& vars) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& g : ideal.generators) {
        std::vector<Polynomial> row;
        for (const auto& v : vars) row.push_back(partial_derivative(g, v));
        rows.push_back(std::move(row));
    }
    return rows;
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
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
        Polynomial term = m[0][j] * poly_determinant(minor, ring);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace {

void subsets_of_size(std::size_t n, std::size_t k, std::size_t start,
                     std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

bool smoothness_check(const Ideal& ideal, int codim, const AffinePatch& patch) {
    auto jac = jacobian(ideal, ideal.ring->vars());
    std::size_t rows = jac.size();
    std::size_t cols = ideal.ring->arity();
    std::size_t k = static_cast<std::size_t>(codim);
    if (k > rows || k > cols) return false;

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    subsets_of_size(rows, k, 0, cur, row_sets);
    subsets_of_size(cols, k, 0, cur, col_sets);

    std::vector<Polynomial> gens = ideal.generators;
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            std::vector<std::vector<Polynomial>> minor;
            for (std::size_t r : rs) {
                std::vector<Polynomial> row;
                for (std::size_t c : cs) row.push_back(jac[r][c]);
                minor.push_back(std::move(row));
            }
            Polynomial det = poly_determinant(minor, ideal.ring);
            if (!det.is_zero()) gens.push_back(std::move(det));
        }
    }
    gens.insert(gens.end(), patch.relations.generators.begin(),
                patch.relations.generators.end());
    return localized_ideal_is_unit(gens, patch.inequalities, ideal.ring);
}

CenterSpec validate_center(const CenterSpec& c) {
    const auto& ring = c.ambient.ring;
    if (!c.ambient.relations.is_zero())
        throw ValidationError("center ambient must be a patch of affine space");
    if (c.point.size() != ring->arity())
        throw ValidationError("center point arity mismatch");
    std::vector<bool> is_sub(ring->arity(), false);
    for (std::size_t i : c.subvariety_vars) {
        if (i >= ring->arity())
            throw ValidationError("subvariety variable index out of range");
        if (is_sub[i]) throw ValidationError("duplicate subvariety variable");
        is_sub[i] = true;
    }
    std::size_t shift = ring->index_of_checked(c.shift_var);
    if (is_sub[shift])
        throw ValidationError("shift variable lies in the coordinate subvariety");
    if (c.f.is_zero()) throw ValidationError("center equation f is zero");
    for (const auto& [e, coeff] : c.f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && is_sub[i])
                throw ValidationError("center equation involves subvariety variable '" +
                                      ring->var(i) + "'");
    }
    for (std::size_t i : c.subvariety_vars) {
        if (c.point[i] != 0)
            throw ValidationError("base point is off the coordinate subvariety (" +
                                  ring->var(i) + " nonzero)");
    }
    if (!c.ambient.contains(c.point))
        throw ValidationError("base point does not lie on the ambient patch");
    if (evaluate(c.f, c.point) != 0)
        throw ValidationError("f does not vanish at the base point");

    Rational dshift = evaluate(partial_derivative(c.f, c.shift_var), c.point);
    if (dshift == 0) {
        std::vector<std::string> alternatives;
        for (std::size_t i = 0; i < ring->arity(); ++i) {
            if (is_sub[i]) continue;
            if (evaluate(partial_derivative(c.f, ring->var(i)), c.point) != 0)
                alternatives.push_back(ring->var(i));
        }
        if (alternatives.empty())
            throw ValidationError("all partial derivatives of f vanish at the base "
                                  "point: Z is singular there");
        std::string msg = "the partial of f along '" + c.shift_var +
                          "' vanishes at the base point; nonzero alternatives:";
        for (const auto& a : alternatives) msg += " " + a;
        throw ValidationError(msg);
    }
    return c;
}

Ideal center_ideal(const CenterSpec& c) {
    std::vector<Polynomial> gens;
    for (std::size_t i : c.subvariety_vars)
        gens.push_back(Polynomial::variable(c.ambient.ring, c.ambient.ring->var(i)));
    gens.push_back(c.f);
    return Ideal::make(c.ambient.ring, std::move(gens));
}

bool ideal_equality_on_patch(const Ideal& a, const Ideal& b, const AffinePatch& patch) {
    if (!PolyRing::compatible(a.ring, b.ring) ||
        !PolyRing::compatible(a.ring, patch.ring))
        throw RingMismatchError("ideal_equality_on_patch: ring mismatch");
    auto contains = [&](const Ideal& big, const Ideal& small) {
        std::vector<Polynomial> relations = big.generators;
        relations.insert(relations.end(), patch.relations.generators.begin(),
                         patch.relations.generators.end());
        for (const auto& f : small.generators) {
            if (!vanishes_on_localized(f, relations, patch.inequalities)) return false;
        }
        return true;
    };
    return contains(a, b) && contains(b, a);
}

Ideal pullback_ideal(const RationalMap& m, const Ideal& ideal) {
    if (!PolyRing::compatible(ideal.ring, m.target.ring))
        throw RingMismatchError("pullback_ideal: ideal not in target ring");
    std::map<std::string, Fraction> assign;
    for (std::size_t i = 0; i < m.components.size(); ++i)
        assign[m.target.ring->var(i)] = m.components[i];
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) {
        Fraction pb = substitute_fractions(g, assign, m.source.ring);
        gens.push_back(pb.num);
    }
    gens.insert(gens.end(), m.source.relations.generators.begin(),
                m.source.relations.generators.end());
    return Ideal::make(m.source.ring, std::move(gens));
}

} // namespace plaincharts
