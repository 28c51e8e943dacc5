#include <plaincharts/projection.hpp>

#include <random>
#include <set>

namespace plaincharts {

namespace {

/// Fresh image variable names u1..um against the source ring.
std::vector<std::string> image_names(const PolyRingPtr& source, std::size_t m) {
    std::vector<std::string> taken = source->vars();
    std::vector<std::string> names;
    for (std::size_t k = 0; k < m; ++k) {
        std::string u = fresh_var_name("u" + std::to_string(k + 1), taken);
        names.push_back(u);
        taken.push_back(u);
    }
    return names;
}

void check_projection_shape(const Ideal& Z, const LinearProjection& proj) {
    if (proj.m() == 0 || proj.n() != Z.ring->arity())
        throw ValidationError("projection matrix shape does not match the ring");
    for (const auto& row : proj.matrix)
        if (row.size() != proj.n())
            throw ValidationError("projection matrix is ragged");
    if (matrix_rank(proj.matrix) != proj.m())
        throw ValidationError("projection matrix does not have full rank");
}

/// The graph ideal (Z, u_k - pi_k(x)) in the joint ring (x vars, u vars).
Ideal graph_ideal(const Ideal& Z, const LinearProjection& proj,
                  const std::vector<std::string>& u_names, PolyRingPtr& joint_out) {
    std::vector<std::string> vars = Z.ring->vars();
    vars.insert(vars.end(), u_names.begin(), u_names.end());
    PolyRingPtr joint = PolyRing::make(vars);
    std::vector<Polynomial> gens;
    for (const auto& g : Z.generators) gens.push_back(substitute(g, {}, joint));
    for (std::size_t k = 0; k < proj.m(); ++k) {
        Polynomial lin = Polynomial::variable(joint, u_names[k]);
        for (std::size_t l = 0; l < proj.n(); ++l) {
            if (proj.matrix[k][l] == 0) continue;
            lin -= Polynomial::constant(joint, proj.matrix[k][l]) *
                   Polynomial::variable(joint, Z.ring->var(l));
        }
        gens.push_back(std::move(lin));
    }
    joint_out = joint;
    return Ideal::make(joint, std::move(gens));
}

} // namespace

LinearProjection LinearProjection::identity(std::size_t n) {
    LinearProjection p;
    p.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) p.matrix[i][i] = 1;
    return p;
}

RationalPoint LinearProjection::apply(const RationalPoint& x) const {
    if (x.size() != n())
        throw ValidationError("projection applied to point of wrong arity");
    RationalPoint out;
    for (const auto& row : matrix) {
        Rational v = 0;
        for (std::size_t l = 0; l < row.size(); ++l) v += row[l] * x[l];
        out.push_back(v);
    }
    return out;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& matrix) {
    std::vector<std::vector<Rational>> a = matrix;
    std::size_t rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

Polynomial implicitize(const Ideal& Z, const LinearProjection& proj) {
    check_projection_shape(Z, proj);
    std::vector<std::string> u_names = image_names(Z.ring, proj.m());
    PolyRingPtr joint;
    Ideal graph = graph_ideal(Z, proj, u_names, joint);
    std::set<std::string> drop(Z.ring->vars().begin(), Z.ring->vars().end());
    Ideal image = elimination_ideal(graph, drop);
    if (image.generators.size() != 1)
        throw ValidationError("image of the projection is not a hypersurface (" +
                              std::to_string(image.generators.size()) +
                              " generators)");
    Polynomial H = image.generators[0];
    return H * Polynomial::constant(
                   H.ring(), Rational(1) / H.leading_coefficient(MonomialOrder::grevlex()));
}

RationalMap local_inverse(const Ideal& Z, const LinearProjection& proj,
                          const RationalPoint& q) {
    check_projection_shape(Z, proj);
    Polynomial H = implicitize(Z, proj);
    PolyRingPtr image_ring = H.ring();
    RationalPoint p = proj.apply(q);

    std::vector<std::string> u_names = image_ring->vars();
    PolyRingPtr joint;
    Ideal graph = graph_ideal(Z, proj, u_names, joint);
    std::size_t n = Z.ring->arity();
    GroebnerBasis gb = buchberger_reduced(
        graph, MonomialOrder::block(static_cast<int>(n)));

    // the block basis is triangular over the image variables: repeatedly
    // pick a basis element d * x_l - n that is linear in some unsolved x_l
    // and mentions only solved source variables otherwise, then substitute
    // the solved fractions so that x_l becomes a fraction in u with a
    // denominator that survives at p
    std::map<std::string, Fraction> solved;
    for (const auto& u : u_names)
        solved[u] = {Polynomial::variable(image_ring, u),
                     Polynomial::constant(image_ring, 1)};
    bool progress = true;
    while (solved.size() < n + u_names.size() && progress) {
        progress = false;
        for (std::size_t l = 0; l < n; ++l) {
            const std::string& xl = Z.ring->var(l);
            if (solved.count(xl)) continue;
            for (const auto& g : gb.basis) {
                // split g = coeff * x_l + rest, requiring degree 1 in x_l
                // and no unsolved source variables elsewhere
                Polynomial coeff = Polynomial::zero(joint);
                Polynomial rest = Polynomial::zero(joint);
                bool usable = true;
                for (const auto& [e, c] : g.terms()) {
                    for (std::size_t i = 0; i < n && usable; ++i)
                        if (i != l && e[i] > 0 && !solved.count(Z.ring->var(i)))
                            usable = false;
                    if (!usable || e[l] > 1) {
                        usable = false;
                        break;
                    }
                    Exponents r = e;
                    if (e[l] == 1) {
                        r[l] = 0;
                        coeff += Polynomial::monomial(joint, std::move(r), c);
                    } else {
                        rest += Polynomial::monomial(joint, std::move(r), c);
                    }
                }
                if (!usable || coeff.is_zero()) continue;
                Fraction a = substitute_fractions(coeff, solved, image_ring);
                Fraction b = substitute_fractions(rest, solved, image_ring);
                // x_l = -b/a; a's numerator must survive at p
                if (evaluate(a.num, p) == 0) continue;
                Fraction value{-(b.num * a.den), b.den * a.num};
                Rational lc = value.den.leading_coefficient(MonomialOrder::grevlex());
                Polynomial scale = Polynomial::constant(image_ring, Rational(1) / lc);
                solved[xl] = {value.num * scale, value.den * scale};
                progress = true;
                break;
            }
        }
    }

    std::vector<Fraction> comps(n);
    std::vector<Polynomial> denominators;
    for (std::size_t l = 0; l < n; ++l) {
        auto it = solved.find(Z.ring->var(l));
        if (it == solved.end())
            throw ValidationError(
                "no linear relation recovers '" + Z.ring->var(l) +
                "' with invertible denominator: projection is not birational "
                "at the base point");
        if (!it->second.den.is_constant()) denominators.push_back(it->second.den);
        comps[l] = it->second;
    }

    AffinePatch W = AffinePatch::make(image_ring, denominators,
                                      Ideal::make(image_ring, {H}), p);
    AffinePatch target = AffinePatch::make(Z.ring, {}, Z, q);
    return RationalMap::make(std::move(W), std::move(target), std::move(comps));
}

HypersurfaceModel hypersurface_model(const Ideal& Z, const LinearProjection& proj,
                                     const RationalPoint& q) {
    RationalMap alpha = local_inverse(Z, proj, q);
    Polynomial H = alpha.source.relations.generators.at(0);
    return {std::move(H), std::move(alpha), q, proj.apply(q)};
}

bool verify_local_iso(const Ideal& Z, const LinearProjection& proj,
                      const HypersurfaceModel& model) {
    try {
        const RationalMap& alpha = model.inverse;
        const AffinePatch& W = alpha.source;
        const RationalPoint& p = model.image_point;

        // (c) the image point lies on H and H is smooth there
        if (evaluate(model.H, p) != 0) return false;
        bool gradient = false;
        for (const auto& u : model.H.ring()->vars())
            if (evaluate(partial_derivative(model.H, u), p) != 0) gradient = true;
        if (!gradient) return false;

        // (a) alpha after pi is the identity on Z, localized at the
        // pulled-back denominators
        std::map<std::string, Polynomial> down;
        std::vector<Polynomial> pulled_dens;
        for (std::size_t k = 0; k < proj.m(); ++k) {
            Polynomial lin = Polynomial::zero(Z.ring);
            for (std::size_t l = 0; l < proj.n(); ++l)
                lin += Polynomial::constant(Z.ring, proj.matrix[k][l]) *
                       Polynomial::variable(Z.ring, Z.ring->var(l));
            down[model.H.ring()->var(k)] = std::move(lin);
        }
        for (const auto& comp : alpha.components)
            pulled_dens.push_back(substitute(comp.den, down, Z.ring));
        AffinePatch V = AffinePatch::make(Z.ring, pulled_dens, Z, model.base_point);
        std::vector<Fraction> pi_comps;
        Polynomial one = Polynomial::constant(Z.ring, 1);
        for (std::size_t k = 0; k < proj.m(); ++k)
            pi_comps.push_back({down.at(model.H.ring()->var(k)), one});
        RationalMap pi = RationalMap::make(V, W, pi_comps);
        if (!map_equal_on_patch(compose(alpha, pi), RationalMap::identity(V)))
            return false;

        // (b) Z pulls back along alpha into (H), localized on W
        for (const auto& g : Z.generators) {
            std::map<std::string, Fraction> assign;
            for (std::size_t l = 0; l < proj.n(); ++l)
                assign[Z.ring->var(l)] = alpha.components[l];
            Fraction pulled = substitute_fractions(g, assign, model.H.ring());
            std::vector<Polynomial> ineqs = W.inequalities;
            ineqs.push_back(pulled.den);
            if (!vanishes_on_localized(pulled.num, {model.H}, ineqs)) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

LinearProjection generic_projection(const Ideal& Z, int dim_Z,
                                    const RationalPoint& q, std::uint64_t seed) {
    std::size_t n = Z.ring->arity();
    if (q.size() != n) throw ValidationError("base point arity mismatch");
    for (const auto& g : Z.generators)
        if (evaluate(g, q) != 0)
            throw ValidationError("base point does not lie on Z");
    if (dim_Z < 0 || static_cast<std::size_t>(dim_Z) >= n)
        throw ValidationError("dimension out of range");
    std::size_t m = static_cast<std::size_t>(dim_Z) + 1;

    // smoothness at q: the Jacobian must have rank n - dim(Z) there
    std::size_t codim = n - static_cast<std::size_t>(dim_Z);
    auto jac = jacobian(Z, Z.ring->vars());
    std::vector<std::vector<Rational>> jac_q;
    for (const auto& row : jac) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(evaluate(e, q));
        jac_q.push_back(std::move(r));
    }
    if (matrix_rank(jac_q) != codim)
        throw ValidationError("Z is not smooth of the stated dimension at q");

    if (m == n) return LinearProjection::identity(n);

    std::mt19937_64 rng(seed);
    std::string last_failure = "no attempt made";
    for (int attempt = 0; attempt < 20; ++attempt) {
        LinearProjection proj;
        proj.matrix.assign(m, std::vector<Rational>(n));
        for (auto& row : proj.matrix)
            for (auto& entry : row)
                entry = Rational(static_cast<long>(rng() % 201) - 100);
        if (matrix_rank(proj.matrix) != m) {
            last_failure = "sampled matrix is rank deficient";
            continue;
        }
        try {
            HypersurfaceModel model = hypersurface_model(Z, proj, q);
            if (verify_local_iso(Z, proj, model)) return proj;
            last_failure = "model failed verification";
        } catch (const std::exception& e) {
            last_failure = e.what();
        }
    }
    throw ValidationError("no generic projection found in 20 attempts; last "
                          "failure: " +
                          last_failure);
}

} // namespace plaincharts
