#pragma once

#include <plaincharts/geometry.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace plaincharts {

/// The shifted defining equations of the center: f_i is f with the shift
/// variable translated by x_i, g_i the exact quotient (f_i - f)/x_i, and
/// h_i the part of g_i vanishing at the base point.
struct ShiftedGenerators {
    CenterSpec center;
    std::vector<Polynomial> f_list;
    std::vector<Polynomial> g_list;
    std::vector<Polynomial> h_list;
    /// V: the ambient patch shrunk so that every g_i is invertible.
    AffinePatch neighborhood;
};

ShiftedGenerators shifted_generators(const CenterSpec& center);

/// One plain chart of the blowup: a patch of affine space in fresh
/// coordinates, the structure map down to V, and the equation of the
/// exceptional divisor inside the chart.
struct BlowupChart {
    AffinePatch patch;
    RationalMap structure_map;
    Polynomial exceptional;
    std::string label; // "f" for the distinguished chart, else "f1", "f2", ...
};

/// The r+1 plain charts of the blowup of V along Z, with pairwise
/// transition maps keyed by (from, to).
struct BlowupAtlas {
    AffinePatch base;
    CenterSpec center;
    ShiftedGenerators shifted;
    std::vector<BlowupChart> charts;
    std::map<std::pair<int, int>, RationalMap> transitions;
};

BlowupAtlas plain_blowup_atlas(const CenterSpec& center);

/// The chart change map from chart i to chart j, defined on chart i
/// restricted to the overlap (the unit condition of the j-th generator).
/// i == j yields the identity.
RationalMap transition_map(const BlowupAtlas& atlas, int i, int j);

/// One affine chart of the Rees-algebra presentation of a blowup: the
/// ambient patch carries the dehomogenized kernel as relations, plus the
/// structure map forgetting the fraction coordinates.
struct ReesChart {
    AffinePatch patch;
    Ideal relations; // same ideal as patch.relations, kept for direct access
    RationalMap structure_map;
    std::string label;
};

std::vector<ReesChart> rees_charts(const AffinePatch& base,
                                   const std::vector<Polynomial>& generators);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct AtlasReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Certifies the atlas: (a) structure maps land in the base, (b) the
/// center ideal pulls back to the principal ideal of the exceptional
/// equation on every chart, (c) all transition pairs are mutually
/// inverse, (d) the Taylor-shift generator identities hold exactly in
/// chart coordinates. Failures are report entries, never exceptions.
AtlasReport verify_atlas(const BlowupAtlas& atlas);

} // namespace plaincharts
