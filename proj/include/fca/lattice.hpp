#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// An (extent, intent) pair fixed under both derivations:
// derive(extent) == intent and derive(intent) == extent.
struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    bool operator==(const FormalConcept&) const = default;
};

// All concepts of a context in canonical order (ascending lectic order of
// intents) plus the covering relation. Canonical indices are stable across
// runs and platforms. Immutable once built.
class ConceptLattice {
public:
    ConceptLattice(std::vector<FormalConcept> concepts,
                   std::vector<std::vector<std::size_t>> upper_covers, std::size_t top_index,
                   std::size_t bottom_index)
        : concepts_(std::move(concepts)),
          upper_covers_(std::move(upper_covers)),
          top_index_(top_index),
          bottom_index_(bottom_index) {}

    std::size_t size() const { return concepts_.size(); }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }
    const FormalConcept& concept_at(std::size_t i) const { return concepts_.at(i); }

    // immediate superconcepts of concept i, ascending
    const std::vector<std::size_t>& upper_covers(std::size_t i) const {
        return upper_covers_.at(i);
    }
    const std::vector<std::vector<std::size_t>>& all_upper_covers() const { return upper_covers_; }

    std::size_t top_index() const { return top_index_; }
    std::size_t bottom_index() const { return bottom_index_; }
    const FormalConcept& top() const { return concepts_[top_index_]; }
    const FormalConcept& bottom() const { return concepts_[bottom_index_]; }

    std::optional<std::size_t> index_of(const FormalConcept& c) const;

private:
    std::vector<FormalConcept> concepts_;
    std::vector<std::vector<std::size_t>> upper_covers_;
    std::size_t top_index_;
    std::size_t bottom_index_;
};

// Every formal concept of the context, each exactly once, in canonical order.
// Iterates closures on the smaller side of the context and derives the other.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx);

// Concepts plus covering relation (transitive reduction of the order).
ConceptLattice build_lattice(const FormalContext& ctx);

// Subconcept order: extent inclusion (equivalently reversed intent inclusion).
bool leq(const FormalConcept& a, const FormalConcept& b);

// Greatest common subconcept / least common superconcept.
FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);
FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);

// Infimum / supremum of any concept set; empty input yields top / bottom.
FormalConcept meet_all(const FormalContext& ctx, std::span<const FormalConcept> cs);
FormalConcept join_all(const FormalContext& ctx, std::span<const FormalConcept> cs);

FormalConcept top_concept(const FormalContext& ctx);
FormalConcept bottom_concept(const FormalContext& ctx);

// Least concept whose extent contains g / greatest whose intent contains m.
// Throw std::out_of_range on a bad index.
FormalConcept object_concept(const FormalContext& ctx, std::size_t g);
FormalConcept attribute_concept(const FormalContext& ctx, std::size_t m);

} // namespace fca
