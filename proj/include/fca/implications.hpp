#pragma once

#include <span>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// "Every object having all attributes of the premise also has all attributes
// of the conclusion." The conclusion need not be disjoint from the premise.
struct Implication {
    AttributeSet premise;
    AttributeSet conclusion;

    bool operator==(const Implication&) const = default;
};

bool holds(const FormalContext& ctx, const Implication& imp);

// Smallest superset of `start` closed under every implication in the list.
AttributeSet implication_closure(std::span<const Implication> imps, AttributeSet start);

// Duquenne-Guigues basis: the minimal implication list from which every valid
// implication of the context follows. Premises are pseudo-closed attribute
// sets, emitted in ascending lectic order; conclusions are full closures.
// Runtime grows exponentially with the attribute count; intended for desk
// scale (|M| up to ~20).
std::vector<Implication> stem_base(const FormalContext& ctx);

// True when no member attribute is implied by the remaining ones.
bool independent(const FormalContext& ctx, const AttributeSet& attrs);

} // namespace fca
