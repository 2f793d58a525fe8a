#include "fca/implications.hpp"

#include "fca/lectic.hpp"

namespace fca {

bool holds(const FormalContext& ctx, const Implication& imp) {
    return ctx.derive(imp.premise).subset_of(ctx.derive(imp.conclusion));
}

AttributeSet implication_closure(std::span<const Implication> imps, AttributeSet start) {
    std::vector<bool> fired(imps.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < imps.size(); ++i) {
            if (fired[i] || !imps[i].premise.subset_of(start)) continue;
            fired[i] = true;
            if (!imps[i].conclusion.subset_of(start)) {
                start |= imps[i].conclusion;
                changed = true;
            }
        }
    }
    return start;
}

std::vector<Implication> stem_base(const FormalContext& ctx) {
    const std::size_t n_attr = ctx.attribute_count();
    std::vector<Implication> basis;

    // Lectic sweep over sets closed under the basis found so far. Each such
    // set that is not context-closed is pseudo-closed and contributes one
    // implication; the sweep stays valid because a new implication never
    // affects sets at or before its own premise.
    AttributeSet current(n_attr);
    for (;;) {
        AttributeSet closed = ctx.close(current);
        if (closed != current) basis.push_back({current, closed});
        if (current.count() == n_attr) break;
        if (!next_closure(current,
                          [&](AttributeSet s) { return implication_closure(basis, std::move(s)); }))
            break;
    }

    return basis;
}

bool independent(const FormalContext& ctx, const AttributeSet& attrs) {
    for (std::size_t m = attrs.find_first(); m != AttributeSet::npos; m = attrs.find_next(m)) {
        AttributeSet rest = attrs;
        rest.remove(m);
        AttributeSet single(attrs.universe());
        single.add(m);
        if (holds(ctx, {rest, single})) return false;
    }
    return true;
}

} // namespace fca
