#include <plaincharts/scenario.hpp>

namespace plaincharts {

namespace {

// Stereographic projection from (0,-1,0): the unit circle in the plane
// z = 0 minus that point, against the line v = w = 0 minus V(u^2-v+1).
const char* kCircle = R"json({
  "ring": ["x", "y", "z"],
  "command": "verify-map",
  "payload": {
    "source": {
      "ring": ["x", "y", "z"],
      "relations": ["x^2+y^2-1", "z"],
      "inequalities": ["y+1"],
      "sample": ["1", "0", "0"]
    },
    "target": {
      "ring": ["u", "v", "w"],
      "relations": ["v", "w"],
      "inequalities": ["u^2-v+1"],
      "sample": ["0", "0", "0"]
    },
    "forward": [
      {"num": "x", "den": "y+1"},
      {"num": "x^2+y^2-1", "den": "y+1"},
      {"num": "z"}
    ],
    "inverse": [
      {"num": "2*u", "den": "u^2-v+1"},
      {"num": "-u^2+v+1", "den": "u^2-v+1"},
      {"num": "w"}
    ]
  }
})json";

// The surface x = (x^2+z^2)y: away from 1-xy = 0 it is isomorphic to the
// plane minus the curve u^2*v^2+1 = 0.
const char* kSurface33 = R"json({
  "ring": ["x", "y", "z"],
  "command": "verify-map",
  "payload": {
    "source": {
      "ring": ["x", "y", "z"],
      "relations": ["x-(x^2+z^2)*y"],
      "inequalities": ["1-x*y"],
      "sample": ["0", "0", "0"]
    },
    "target": {
      "ring": ["u", "v"],
      "inequalities": ["u^2*v^2+1"],
      "sample": ["0", "0"]
    },
    "forward": [
      {"num": "z", "den": "1-x*y"},
      {"num": "y"}
    ],
    "inverse": [
      {"num": "u^2*v", "den": "u^2*v^2+1"},
      {"num": "v"},
      {"num": "u", "den": "u^2*v^2+1"}
    ]
  }
})json";

// On the space curve {y^2 = x^3-x, z^2 = y^3-y}, eliminating y yields the
// relation z^2 = y*(x^3-x-1); its left-over form lies in the curve ideal.
const char* kSpaceCurve22 = R"json({
  "ring": ["x", "y", "z"],
  "command": "member",
  "payload": {
    "f": "z^2-y*(x^3-x-1)",
    "generators": ["y^2-x^3+x", "z^2-y^3+y"]
  }
})json";

// Blowup of the elliptic-curve center {z = 0, x-x^3+y^2 = 0} at the
// origin, with the shift taken in the x direction.
const char* kEllipticBlowup = R"json({
  "ring": ["x", "y", "z"],
  "command": "blowup",
  "payload": {
    "subvariety_vars": ["z"],
    "f": "x-x^3+y^2",
    "point": ["0", "0", "0"],
    "shift_var": "x"
  }
})json";

// The plane blown up at the origin, presented by Rees charts for the
// center (x, y).
const char* kA2Origin = R"json({
  "ring": ["x", "y"],
  "command": "rees",
  "payload": {
    "generators": ["x", "y"]
  }
})json";

struct Entry {
    const char* name;
    const char* text;
};

const Entry kEntries[] = {
    {"circle", kCircle},
    {"surface-3-3", kSurface33},
    {"space-curve-2-2", kSpaceCurve22},
    {"elliptic-blowup", kEllipticBlowup},
    {"a2-origin", kA2Origin},
};

} // namespace

const std::vector<std::string>& builtin_example_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : kEntries) out.push_back(e.name);
        return out;
    }();
    return names;
}

Scenario builtin_example(const std::string& name) {
    for (const auto& e : kEntries)
        if (name == e.name) return parse_scenario_text(e.text);
    std::string msg = "unknown example '" + name + "'; available:";
    for (const auto& e : kEntries) msg += std::string(" ") + e.name;
    throw ValidationError(msg);
}

} // namespace plaincharts
