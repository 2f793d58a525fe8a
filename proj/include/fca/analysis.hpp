#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fca/context.hpp"
#include "fca/lattice.hpp"

namespace fca {

// Splits the attribute universe into event locations and persons. The two
// sets are disjoint and together cover every attribute.
struct AttributePartition {
    AttributeSet location_attributes;
    AttributeSet person_attributes;
};

inline constexpr std::string_view default_person_pattern = "P[0-9]+";

// Attributes whose full name matches the regular expression are persons;
// everything else is a location. Throws std::regex_error on a bad pattern.
AttributePartition partition_by_pattern(const FormalContext& ctx,
                                        std::string_view person_pattern = default_person_pattern);

// The concept generated by an attribute set: (X', X''). Its intent is the
// smallest concept intent containing X. If no object carries all of X the
// extent is empty and the intent is the full attribute set's closure.
FormalConcept concept_of_attributes(const FormalContext& ctx, const AttributeSet& attrs);

// Persons tied to one event: the event's attributes restricted to the person
// side of the partition. Throws std::out_of_range on a bad event index.
AttributeSet network_group(const FormalContext& ctx, const AttributePartition& partition,
                           std::size_t event);

// Every event exhibiting all of the given attributes.
ObjectSet linked_events(const FormalContext& ctx, const AttributeSet& attrs);

// All proper subconcepts of `target` (concepts whose intent contains the
// target's intent), in canonical order. Throws std::invalid_argument when the
// target is not a concept of the lattice.
std::vector<FormalConcept> subsumption_report(const ConceptLattice& lattice,
                                              const FormalConcept& target);

// Events on which attributes p and q co-occur.
ObjectSet shared_events(const FormalContext& ctx, std::size_t p, std::size_t q);

} // namespace fca
