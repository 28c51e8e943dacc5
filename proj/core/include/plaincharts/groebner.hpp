#pragma once

#include <plaincharts/polynomial.hpp>

#include <set>
#include <string>
#include <vector>

namespace plaincharts {

/// A finitely generated ideal. Zero generators are dropped on construction.
struct Ideal {
    PolyRingPtr ring;
    std::vector<Polynomial> generators;

    static Ideal make(PolyRingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(PolyRingPtr ring) { return make(std::move(ring), {}); }
    bool is_zero() const { return generators.empty(); }
};

/// Reduced Groebner basis: monic, autoreduced, unique for (ideal, order).
struct GroebnerBasis {
    PolyRingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;

    bool is_unit_ideal() const;
};

/// Pair-reduction budget shared by all Groebner computations that do not
/// pass an explicit one. Guards the CLI against pathological inputs.
int default_pair_budget();
void set_default_pair_budget(int budget);

/// Buchberger with normal pair selection and both of Buchberger's
/// elimination criteria. Throws BudgetExceededError past the budget.
GroebnerBasis buchberger_reduced(const Ideal& ideal, MonomialOrder order,
                                 int pair_budget = -1);

/// Remainder of multivariate division of f by the basis; fully reduced.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equality(const Ideal& a, const Ideal& b);

/// Generators of the intersection of the ideal with the subring omitting
/// `drop`, via a block order. The result lives in the ring of kept
/// variables (in their original order).
Ideal elimination_ideal(const Ideal& ideal, const std::set<std::string>& drop);

/// True iff f vanishes identically on V(relations) minus the zero sets of
/// the inequalities: membership of f in (relations, 1 - w * prod ineqs).
bool vanishes_on_localized(const Polynomial& f,
                           const std::vector<Polynomial>& relations,
                           const std::vector<Polynomial>& inequalities);

/// Cheap syntactic unit test: f is a nonzero constant times a product of
/// powers of the inequalities. Never false positives, may false negative.
bool is_obviously_unit(const Polynomial& f,
                       const std::vector<Polynomial>& inequalities);

/// True iff f is invertible on the principal open set where all
/// inequalities are nonzero, modulo the relations:
/// 1 in (relations, f, 1 - w * prod ineqs).
bool is_unit_modulo(const Polynomial& f,
                    const std::vector<Polynomial>& relations,
                    const std::vector<Polynomial>& inequalities);

/// True iff (relations, 1 - w * prod ineqs) is the unit ideal, i.e. the
/// localized variety V(relations) minus the inequality hypersurfaces is
/// empty.
bool localized_ideal_is_unit(const std::vector<Polynomial>& relations,
                             const std::vector<Polynomial>& inequalities,
                             const PolyRingPtr& ring);

/// Kernel of the ring map R[y_1..y_m] -> R[t], y_i -> a_i * t, computed by
/// eliminating t from (y_i - a_i t). Returns an ideal in R's variables
/// extended by y_names.
Ideal ring_map_kernel(const PolyRingPtr& base_ring,
                      const std::vector<Polynomial>& images,
                      const std::vector<std::string>& y_names);

/// A name not colliding with anything in `taken`; starts from `desired`
/// and appends underscores.
std::string fresh_var_name(const std::string& desired,
                           const std::vector<std::string>& taken);

} // namespace plaincharts
