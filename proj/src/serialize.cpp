#include "fca/serialize.hpp"

#include <json.hpp>

#include "fca/lattice.hpp"

namespace fca {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// joins pre-escaped names; label text never re-escapes its separators
std::string join_escaped(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t i : idx) {
        if (!out.empty()) out += ' ';
        out += dot_escape(names[i]);
    }
    return out;
}

std::string full_label(const FormalConcept& c, const FormalContext& ctx) {
    return "{" + join_escaped(ctx.attribute_names(), c.intent.members()) + "}\\n{" +
           join_escaped(ctx.object_names(), c.extent.members()) + "}";
}

} // namespace

std::string to_dot(const ConceptLattice& lattice, const FormalContext& ctx,
                   const DiagramOptions& opts) {
    // For reduced labeling, pin every name to its generating concept first.
    std::vector<std::string> attr_part(lattice.size());
    std::vector<std::string> obj_part(lattice.size());
    if (opts.labeling == Labeling::reduced) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            auto at = lattice.index_of(attribute_concept(ctx, m));
            std::string& label = attr_part[*at];
            if (!label.empty()) label += ' ';
            label += dot_escape(ctx.attribute_name(m));
        }
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            auto at = lattice.index_of(object_concept(ctx, g));
            std::string& label = obj_part[*at];
            if (!label.empty()) label += ' ';
            label += dot_escape(ctx.object_name(g));
        }
    }

    std::string out = "digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        std::string label;
        if (opts.labeling == Labeling::full) {
            label = full_label(lattice.concept_at(i), ctx);
        } else {
            label = attr_part[i];
            if (!attr_part[i].empty() && !obj_part[i].empty()) label += "\\n";
            label += obj_part[i];
        }
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t child = 0; child < lattice.size(); ++child)
        for (std::size_t parent : lattice.upper_covers(child))
            out += "  c" + std::to_string(child) + " -> c" + std::to_string(parent) + ";\n";
    out += "}\n";
    return out;
}

std::string to_json(const ConceptLattice& lattice, const FormalContext& ctx) {
    nlohmann::ordered_json doc;
    doc["objects"] = ctx.object_names();
    doc["attributes"] = ctx.attribute_names();

    auto names_of = [](const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
        std::vector<std::string> out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.push_back(names[i]);
        return out;
    };

    nlohmann::ordered_json concepts = nlohmann::ordered_json::array();
    for (const auto& c : lattice.concepts()) {
        nlohmann::ordered_json node;
        node["extent"] = names_of(ctx.object_names(), c.extent.members());
        node["intent"] = names_of(ctx.attribute_names(), c.intent.members());
        concepts.push_back(std::move(node));
    }
    doc["concepts"] = std::move(concepts);

    nlohmann::ordered_json covers = nlohmann::ordered_json::array();
    for (std::size_t child = 0; child < lattice.size(); ++child)
        for (std::size_t parent : lattice.upper_covers(child))
            covers.push_back(nlohmann::ordered_json::array({child, parent}));
    doc["covers"] = std::move(covers);

    return doc.dump(2) + "\n";
}

} // namespace fca
