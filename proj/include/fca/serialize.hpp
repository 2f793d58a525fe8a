#pragma once

#include <string>

#include "fca/context.hpp"
#include "fca/lattice.hpp"

namespace fca {

// Hasse diagram labeling. `full` prints every node's extent and intent;
// `reduced` prints each object only at its object concept and each attribute
// only at its attribute concept, so every name appears exactly once.
enum class Labeling { full, reduced };

struct DiagramOptions {
    Labeling labeling = Labeling::full;
};

// Graphviz digraph of the covering relation. One node per concept (id = its
// canonical index), one edge per covering pair drawn from subconcept up to
// superconcept, rankdir=BT so the top concept lands highest. Byte output is
// deterministic for a given context.
std::string to_dot(const ConceptLattice& lattice, const FormalContext& ctx,
                   const DiagramOptions& opts = {});

// JSON document with keys, in order: "objects", "attributes" (name arrays),
// "concepts" ([{extent, intent}] as name arrays, canonical order), "covers"
// ([child, parent] index pairs). Deterministic bytes, LF newlines.
std::string to_json(const ConceptLattice& lattice, const FormalContext& ctx);

} // namespace fca
