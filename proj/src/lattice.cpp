#include "fca/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "fca/bitset.hpp"
#include "fca/lectic.hpp"

namespace fca {

std::optional<std::size_t> ConceptLattice::index_of(const FormalConcept& c) const {
    for (std::size_t i = 0; i < concepts_.size(); ++i)
        if (concepts_[i] == c) return i;
    return std::nullopt;
}

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
    std::vector<FormalConcept> concepts;

    if (ctx.attribute_count() <= ctx.object_count()) {
        // Closure enumeration over attribute sets; intents come out in lectic
        // order directly.
        AttributeSet intent = ctx.close(AttributeSet(ctx.attribute_count()));
        for (;;) {
            concepts.push_back({ctx.derive(intent), intent});
            if (!next_closure(intent, [&](const AttributeSet& s) { return ctx.close(s); })) break;
        }
    } else {
        // Cheaper side is the object one; enumerate extents, then restore the
        // canonical intent order.
        ObjectSet extent = ctx.close(ObjectSet(ctx.object_count()));
        for (;;) {
            concepts.push_back({extent, ctx.derive(extent)});
            if (!next_closure(extent, [&](const ObjectSet& s) { return ctx.close(s); })) break;
        }
        std::sort(concepts.begin(), concepts.end(), [](const FormalConcept& a, const FormalConcept& b) {
            return AttributeSet::lectic_less(a.intent, b.intent);
        });
    }

    return concepts;
}

ConceptLattice build_lattice(const FormalContext& ctx) {
    std::vector<FormalConcept> concepts = enumerate_concepts(ctx);
    const std::size_t n = concepts.size();

    // strictly_below[j] = concepts strictly under j, as a bitset over indices
    std::vector<Bitset> strictly_below(n, Bitset(n));
    std::vector<Bitset> strictly_above(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq(concepts[i], concepts[j])) {
                strictly_below[j].set(i);
                strictly_above[i].set(j);
            }

    // covers = transitive reduction: j covers i iff nothing sits between them
    std::vector<std::vector<std::size_t>> upper_covers(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = strictly_above[i].find_first(); j != Bitset::npos;
             j = strictly_above[i].find_next(j))
            if ((strictly_above[i] & strictly_below[j]).none()) upper_covers[i].push_back(j);

    std::size_t top = 0;
    std::size_t bottom = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (concepts[i].extent.is_full()) top = i;
        if (concepts[i].intent.is_full()) bottom = i;
    }

    return ConceptLattice(std::move(concepts), std::move(upper_covers), top, bottom);
}

bool leq(const FormalConcept& a, const FormalConcept& b) {
    return a.extent.subset_of(b.extent);
}

FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
    ObjectSet extent = a.extent & b.extent;
    return {extent, ctx.derive(extent)};
}

FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
    // The intersection of two intents is itself an intent, so no closure is
    // needed on the intent side.
    AttributeSet intent = a.intent & b.intent;
    return {ctx.derive(intent), intent};
}

FormalConcept meet_all(const FormalContext& ctx, std::span<const FormalConcept> cs) {
    FormalConcept acc = top_concept(ctx);
    for (const auto& c : cs) acc = meet(ctx, acc, c);
    return acc;
}

FormalConcept join_all(const FormalContext& ctx, std::span<const FormalConcept> cs) {
    FormalConcept acc = bottom_concept(ctx);
    for (const auto& c : cs) acc = join(ctx, acc, c);
    return acc;
}

FormalConcept top_concept(const FormalContext& ctx) {
    ObjectSet everything = ctx.all_objects();
    return {everything, ctx.derive(everything)};
}

FormalConcept bottom_concept(const FormalContext& ctx) {
    AttributeSet everything = ctx.all_attributes();
    return {ctx.derive(everything), everything};
}

FormalConcept object_concept(const FormalContext& ctx, std::size_t g) {
    if (g >= ctx.object_count()) throw std::out_of_range("object index out of range");
    ObjectSet single(ctx.object_count());
    single.add(g);
    AttributeSet intent = ctx.derive(single);
    return {ctx.derive(intent), intent};
}

FormalConcept attribute_concept(const FormalContext& ctx, std::size_t m) {
    if (m >= ctx.attribute_count()) throw std::out_of_range("attribute index out of range");
    AttributeSet single(ctx.attribute_count());
    single.add(m);
    ObjectSet extent = ctx.derive(single);
    return {extent, ctx.derive(extent)};
}

} // namespace fca
