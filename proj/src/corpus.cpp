#include "novbott/corpus.hpp"

#include <map>
#include <utility>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

// One vertex, one loop; the class pairs with the loop as 1, so the twisted
// background cohomology vanishes in both degrees.
const char kCircleXi1[] = R"({
  "format": "novbott/complex",
  "name": "circle_xi1",
  "description": "circle, one vertex and one loop, class pairing 1 with the loop",
  "top_degree": 1,
  "fiber_dim": 1,
  "num_vars": 1,
  "period_basis": [1.0],
  "cells": [1, 1],
  "generators": [
    { "name": "a", "matrix": [["1"]], "exponents": [1] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": [] }
      ]
    }
  ]
})";

// Same cell structure with the zero class: the coboundary vanishes and the
// ordinary circle cohomology (1, 1) comes back.
const char kCircleXi0[] = R"({
  "format": "novbott/complex",
  "name": "circle_xi0",
  "description": "circle with the zero class",
  "top_degree": 1,
  "fiber_dim": 1,
  "num_vars": 0,
  "period_basis": [],
  "cells": [1, 1],
  "generators": [
    { "name": "a", "matrix": [["1"]], "exponents": [] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": [] }
      ]
    }
  ]
})";

// Two-torus with the standard square cell structure; the class pairs
// (1, 0) with the loops. Generic dimensions vanish, and the single jump
// sits where both variables are 1.
const char kTorusXi10[] = R"({
  "format": "novbott/complex",
  "name": "torus_xi10",
  "description": "two-torus, square cell structure, class pairing (1, 0) with the loops",
  "top_degree": 2,
  "fiber_dim": 1,
  "num_vars": 2,
  "period_basis": [1.0, 0.0],
  "cells": [1, 2, 1],
  "generators": [
    { "name": "a", "matrix": [["1"]], "exponents": [1, 0] },
    { "name": "b", "matrix": [["1"]], "exponents": [0, 1] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 0, "cell": 1, "face": 0,
      "terms": [
        { "sign": 1, "word": ["b"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": [] },
        { "sign": -1, "word": ["a", "b", "a^-1"] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 1,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": ["a", "b", "a^-1", "b^-1"] }
      ]
    }
  ]
})";

// The same square cell structure with the zero class gives the ordinary
// torus cohomology (1, 2, 1).
const char kTorusXi0[] = R"({
  "format": "novbott/complex",
  "name": "torus_xi0",
  "description": "two-torus with the zero class",
  "top_degree": 2,
  "fiber_dim": 1,
  "num_vars": 0,
  "period_basis": [],
  "cells": [1, 2, 1],
  "generators": [
    { "name": "a", "matrix": [["1"]], "exponents": [] },
    { "name": "b", "matrix": [["1"]], "exponents": [] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 0, "cell": 1, "face": 0,
      "terms": [
        { "sign": 1, "word": ["b"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": [] },
        { "sign": -1, "word": ["a", "b", "a^-1"] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 1,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": ["a", "b", "a^-1", "b^-1"] }
      ]
    }
  ]
})";

// Minimal sphere: a vertex and a top cell, no twisting possible.
const char kSphereComplex[] = R"({
  "format": "novbott/complex",
  "name": "sphere_complex",
  "description": "two-sphere, one vertex and one top cell",
  "top_degree": 2,
  "fiber_dim": 1,
  "num_vars": 0,
  "period_basis": [],
  "cells": [1, 0, 1],
  "generators": [],
  "boundaries": []
})";

// Height function on the sphere: one minimum, one maximum.
const char kSphereMorse[] = R"({
  "format": "novbott/morse",
  "name": "sphere_morse",
  "description": "height function on the two-sphere",
  "fiber_dim": 1,
  "components": [
    { "name": "south", "index": 0, "poincare": [1] },
    { "name": "north", "index": 2, "poincare": [1] }
  ]
})";

// Circle-valued height on the torus whose critical set is two circles.
const char kTorusBott[] = R"({
  "format": "novbott/morse",
  "name": "torus_bott",
  "description": "function on the two-torus with two critical circles",
  "fiber_dim": 1,
  "components": [
    { "name": "bottom_circle", "index": 0, "poincare": [1, 1] },
    { "name": "top_circle", "index": 1, "poincare": [1, 1] }
  ]
})";

// Klein-bottle cell structure where the orientation loop acts by -1 in the
// fiber. Background cohomology vanishes everywhere, and the numeric kernel
// stays empty along the whole deformation ray.
const char kKleinLike[] = R"({
  "format": "novbott/complex",
  "name": "klein_like",
  "description": "Klein-bottle cell structure, orientation loop acting by -1",
  "top_degree": 2,
  "fiber_dim": 1,
  "num_vars": 1,
  "period_basis": [1.0],
  "cells": [1, 2, 1],
  "generators": [
    { "name": "a", "matrix": [["-1"]], "exponents": [0] },
    { "name": "b", "matrix": [["1"]], "exponents": [1] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 0, "cell": 1, "face": 0,
      "terms": [
        { "sign": 1, "word": ["b"] },
        { "sign": -1, "word": [] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": [] },
        { "sign": 1, "word": ["a", "b"] }
      ]
    },
    {
      "degree": 1, "cell": 0, "face": 1,
      "terms": [
        { "sign": 1, "word": ["a"] },
        { "sign": -1, "word": ["a", "b", "a", "b^-1"] }
      ]
    }
  ]
})";

// Knot-complement style one-by-one complex whose entry is x^2 - x + 1.
// The value at any rational x away from the roots is nonzero, so no
// rational probe produces a jump.
const char kAlexanderTrefoil[] = R"({
  "format": "novbott/complex",
  "name": "alexander_trefoil",
  "description": "rank-one complex carrying the polynomial x^2 - x + 1",
  "top_degree": 1,
  "fiber_dim": 1,
  "num_vars": 1,
  "period_basis": [1.0],
  "cells": [1, 1],
  "generators": [
    { "name": "g", "matrix": [["1"]], "exponents": [1] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["g", "g"] },
        { "sign": -1, "word": ["g"] },
        { "sign": 1, "word": [] }
      ]
    }
  ]
})";

// Same complex with the scalar fiber replaced by the rank-two companion
// action of t^2 - t + 1, so the root becomes reachable over the rationals:
// at x = 1 the block C^2 - C + I vanishes identically.
const char kAlexanderTrefoilCompanion[] = R"({
  "format": "novbott/complex",
  "name": "alexander_trefoil_companion",
  "description": "companion-matrix fiber for x^2 - x + 1; the block vanishes at x = 1",
  "top_degree": 1,
  "fiber_dim": 2,
  "num_vars": 1,
  "period_basis": [1.0],
  "cells": [1, 1],
  "generators": [
    { "name": "g", "matrix": [["0", "-1"], ["1", "1"]], "exponents": [1] }
  ],
  "boundaries": [
    {
      "degree": 0, "cell": 0, "face": 0,
      "terms": [
        { "sign": 1, "word": ["g", "g"] },
        { "sign": -1, "word": ["g"] },
        { "sign": 1, "word": [] }
      ]
    }
  ]
})";

// One-parameter deformation of the circle coboundary: D(s) = [s].
const char kCircleLinearFamily[] = R"({
  "format": "novbott/family",
  "name": "circle_linear_family",
  "description": "circle coboundary deformed linearly in the parameter",
  "base_point": "0",
  "order": 3,
  "cochain_ranks": [1, 1],
  "terms": [
    { "degree": 0, "power": 1, "matrix": [["1"]] }
  ]
})";

// Torus family where one edge direction deforms linearly and the other
// stays constant in the parameter.
const char kTorusLinearFamily[] = R"({
  "format": "novbott/family",
  "name": "torus_linear_family",
  "description": "torus coboundaries with one direction deformed linearly",
  "base_point": "0",
  "order": 3,
  "cochain_ranks": [1, 2, 1],
  "terms": [
    { "degree": 0, "power": 1, "matrix": [["1"], ["0"]] },
    { "degree": 1, "power": 1, "matrix": [["0", "1"]] }
  ]
})";

const std::vector<std::pair<std::string, const char*>>& corpus_entries() {
    static const std::vector<std::pair<std::string, const char*>> entries = {
        {"circle_xi1", kCircleXi1},
        {"circle_xi0", kCircleXi0},
        {"torus_xi10", kTorusXi10},
        {"torus_xi0", kTorusXi0},
        {"sphere_complex", kSphereComplex},
        {"sphere_morse", kSphereMorse},
        {"torus_bott", kTorusBott},
        {"klein_like", kKleinLike},
        {"alexander_trefoil", kAlexanderTrefoil},
        {"alexander_trefoil_companion", kAlexanderTrefoilCompanion},
        {"circle_linear_family", kCircleLinearFamily},
        {"torus_linear_family", kTorusLinearFamily},
    };
    return entries;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, text] : corpus_entries()) out.push_back(name);
        return out;
    }();
    return names;
}

const std::string& corpus_document_text(const std::string& name) {
    static const std::map<std::string, std::string> by_name = [] {
        std::map<std::string, std::string> out;
        for (const auto& [key, text] : corpus_entries()) out.emplace(key, text);
        return out;
    }();
    const auto it = by_name.find(name);
    if (it == by_name.end()) {
        std::string msg = "unknown example '" + name + "'; valid names:";
        for (const std::string& n : corpus_names()) msg += " " + n;
        throw invalid_input(msg);
    }
    return it->second;
}

}  // namespace novbott
