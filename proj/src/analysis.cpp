#include "fca/analysis.hpp"

#include <regex>
#include <stdexcept>

namespace fca {

AttributePartition partition_by_pattern(const FormalContext& ctx,
                                        std::string_view person_pattern) {
    std::regex pattern{std::string(person_pattern)};
    AttributePartition partition{AttributeSet(ctx.attribute_count()),
                                 AttributeSet(ctx.attribute_count())};
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        if (std::regex_match(ctx.attribute_name(m), pattern))
            partition.person_attributes.add(m);
        else
            partition.location_attributes.add(m);
    }
    return partition;
}

FormalConcept concept_of_attributes(const FormalContext& ctx, const AttributeSet& attrs) {
    ObjectSet extent = ctx.derive(attrs);
    return {extent, ctx.derive(extent)};
}

AttributeSet network_group(const FormalContext& ctx, const AttributePartition& partition,
                           std::size_t event) {
    if (event >= ctx.object_count()) throw std::out_of_range("event index out of range");
    ObjectSet single(ctx.object_count());
    single.add(event);
    return ctx.derive(single) & partition.person_attributes;
}

ObjectSet linked_events(const FormalContext& ctx, const AttributeSet& attrs) {
    return ctx.derive(attrs);
}

std::vector<FormalConcept> subsumption_report(const ConceptLattice& lattice,
                                              const FormalConcept& target) {
    if (!lattice.index_of(target))
        throw std::invalid_argument("target concept does not belong to the lattice");

    std::vector<FormalConcept> below;
    for (const auto& c : lattice.concepts())
        if (c != target && target.intent.subset_of(c.intent)) below.push_back(c);
    return below;
}

ObjectSet shared_events(const FormalContext& ctx, std::size_t p, std::size_t q) {
    if (p >= ctx.attribute_count() || q >= ctx.attribute_count())
        throw std::out_of_range("attribute index out of range");
    AttributeSet pair(ctx.attribute_count());
    pair.add(p);
    pair.add(q);
    return ctx.derive(pair);
}

} // namespace fca
