#pragma once

#include <plaincharts/groebner.hpp>
#include <plaincharts/polynomial.hpp>

#include <optional>
#include <vector>

namespace plaincharts {

/// A principal open subset of an affine variety: the complement of the
/// inequality hypersurfaces inside V(relations). Nonemptiness is
/// witnessed by a stored rational sample point.
struct AffinePatch {
    PolyRingPtr ring;
    std::vector<Polynomial> inequalities;
    Ideal relations;
    RationalPoint sample;

    /// Checked construction. Without an explicit sample a bounded random
    /// search over small rationals is run (relations must be zero for the
    /// search to have a chance); failure is a hard ValidationError.
    static AffinePatch make(PolyRingPtr ring, std::vector<Polynomial> inequalities,
                            Ideal relations,
                            std::optional<RationalPoint> sample = std::nullopt);

    /// All of affine space, sampled at the origin.
    static AffinePatch full(PolyRingPtr ring);

    /// This patch with extra inequalities adjoined (deduplicated, constants
    /// dropped). A fresh witness is required.
    AffinePatch restricted(const std::vector<Polynomial>& extra,
                           std::optional<RationalPoint> sample = std::nullopt) const;

    /// True iff all inequalities are nonzero and all relations vanish at p.
    bool contains(const RationalPoint& p) const;
};

/// True iff f is invertible on the patch modulo the patch relations plus
/// the optional extra ideal.
bool is_unit_on_patch(const Polynomial& f, const AffinePatch& patch,
                      const Ideal* modulo = nullptr);

/// A tuple of polynomial fractions between patches. Construction checks
/// that denominators are units on the source and that the source sample
/// lands in the target patch.
struct RationalMap {
    AffinePatch source;
    AffinePatch target;
    std::vector<Fraction> components;

    static RationalMap make(AffinePatch source, AffinePatch target,
                            std::vector<Fraction> components);
    static RationalMap identity(const AffinePatch& patch);

    RationalPoint apply(const RationalPoint& p) const;
};

/// g after f, with denominators cleared to a single fraction per
/// component. The returned map's source is f's source restricted by any
/// composed denominator that is not already a unit there.
RationalMap compose(const RationalMap& g, const RationalMap& f);

/// Symbolic equality on the source patch: cross-multiplied component
/// differences vanish on the patch (membership modulo relations,
/// localized at the patch inequalities and the denominators).
bool map_equal_on_patch(const RationalMap& f, const RationalMap& g);

std::vector<std::vector<Polynomial>> jacobian(const Ideal& ideal,
                                              const std::vector<std::string>& vars);

/// Cofactor-expansion determinant of a small polynomial matrix.
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
                            const PolyRingPtr& ring);

/// Jacobian criterion: I plus its codim x codim minors generate the unit
/// ideal on the patch.
bool smoothness_check(const Ideal& ideal, int codim, const AffinePatch& patch);

/// A smooth hypersurface Z inside the coordinate subvariety cut out by
/// the listed variables, around the base point p.
struct CenterSpec {
    AffinePatch ambient;                    // patch of affine space, no relations
    std::vector<std::size_t> subvariety_vars; // indices of the vanishing coordinates
    Polynomial f;                           // defining equation within the subvariety
    RationalPoint point;                    // p
    std::string shift_var;                  // the distinguished direction x_n
};

/// Checks every CenterSpec invariant. On a vanishing shift partial the
/// diagnostic lists alternative shift variables; a point where all
/// partials vanish is rejected as singular.
CenterSpec validate_center(const CenterSpec& c);

/// The center ideal (x_i for i in subvariety_vars, f).
Ideal center_ideal(const CenterSpec& c);

/// Ideal equality in the coordinate ring of the patch (relations adjoined,
/// inequalities inverted): mutual membership of generators, localized.
bool ideal_equality_on_patch(const Ideal& a, const Ideal& b, const AffinePatch& patch);

/// Generators of I pulled back along m with denominators cleared, in the
/// source ring with the source relations adjoined.
Ideal pullback_ideal(const RationalMap& m, const Ideal& ideal);

} // namespace plaincharts
