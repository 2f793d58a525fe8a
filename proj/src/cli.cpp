#include "fca/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fca/analysis.hpp"
#include "fca/context.hpp"
#include "fca/context_io.hpp"
#include "fca/implications.hpp"
#include "fca/lattice.hpp"
#include "fca/serialize.hpp"

namespace fca {

namespace {

// exit 2
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exit 1
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input_path;
    std::string input_format;  // empty = infer from extension
    std::string output_format; // empty = command default
    std::string labeling = "full";
    std::string person_pattern{default_person_pattern};
    bool verify = false;

    std::string derive_objects;
    std::string derive_attributes;
    std::string concept_attributes;
    std::string event_name;
    std::string linked_attributes;
    std::string subsumed_attributes;
};

std::vector<std::string> split_comma_list(const std::string& joined) {
    std::vector<std::string> names;
    if (joined.empty()) return names;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = joined.find(',', start);
        if (comma == std::string::npos) {
            names.push_back(joined.substr(start));
            return names;
        }
        names.push_back(joined.substr(start, comma - start));
        start = comma + 1;
    }
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t next = std::min({row[j] + 1, row[j - 1] + 1,
                                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = row[j];
            row[j] = next;
        }
    }
    return row[b.size()];
}

[[noreturn]] void fail_unknown_name(const char* kind, const std::string& name,
                                    const std::vector<std::string>& candidates) {
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& c : candidates) {
        std::size_t d = edit_distance(name, c);
        if (d <= 2) scored.emplace_back(d, c);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string msg = std::string("unknown ") + kind + " '" + name + "'";
    if (!scored.empty()) {
        msg += " (near misses:";
        for (std::size_t i = 0; i < scored.size() && i < 3; ++i) msg += ' ' + scored[i].second;
        msg += ')';
    }
    throw UsageError(msg);
}

ObjectSet resolve_objects(const FormalContext& ctx, const std::string& joined) {
    ObjectSet set(ctx.object_count());
    for (const auto& name : split_comma_list(joined)) {
        auto idx = ctx.object_index(name);
        if (!idx) fail_unknown_name("object", name, ctx.object_names());
        set.add(*idx);
    }
    return set;
}

AttributeSet resolve_attributes(const FormalContext& ctx, const std::string& joined) {
    AttributeSet set(ctx.attribute_count());
    for (const auto& name : split_comma_list(joined)) {
        auto idx = ctx.attribute_index(name);
        if (!idx) fail_unknown_name("attribute", name, ctx.attribute_names());
        set.add(*idx);
    }
    return set;
}

std::string object_names_line(const FormalContext& ctx, const ObjectSet& set) {
    std::string out;
    for (std::size_t g : set.members()) {
        if (!out.empty()) out += ' ';
        out += ctx.object_name(g);
    }
    return out;
}

std::string attribute_names_line(const FormalContext& ctx, const AttributeSet& set) {
    std::string out;
    for (std::size_t m : set.members()) {
        if (!out.empty()) out += ' ';
        out += ctx.attribute_name(m);
    }
    return out;
}

std::string concept_fields(const FormalContext& ctx, const FormalConcept& c) {
    return "extent {" + object_names_line(ctx, c.extent) + "} intent {" +
           attribute_names_line(ctx, c.intent) + "}";
}

void verify_concept(const FormalContext& ctx, const FormalConcept& c) {
    if (ctx.derive(c.extent) != c.intent || ctx.derive(c.intent) != c.extent)
        throw std::runtime_error("self-check failed: printed concept is not a derivation fixed point");
}

FormalContext load_context(const Options& opt) {
    std::string format = opt.input_format;
    if (format.empty()) {
        if (opt.input_path.ends_with(".cxt"))
            format = "cxt";
        else if (opt.input_path.ends_with(".csv"))
            format = "csv";
        else
            throw UsageError("cannot infer input format of '" + opt.input_path +
                             "'; pass --input-format cxt|csv");
    }

    std::ifstream in(opt.input_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + opt.input_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + opt.input_path + "'");

    try {
        return format == "csv" ? parse_csv_crosstable(buffer.str()) : parse_cxt(buffer.str());
    } catch (const ParseError& e) {
        throw UsageError(opt.input_path + ": " + e.what());
    }
}

void run_concepts(const FormalContext& ctx, const Options& opt, std::ostream& out) {
    if (!opt.output_format.empty() && opt.output_format != "text")
        throw UsageError("unknown format '" + opt.output_format + "' for concepts (expected text)");
    auto concepts = enumerate_concepts(ctx);
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        if (opt.verify) verify_concept(ctx, concepts[i]);
        out << i << ' ' << concept_fields(ctx, concepts[i]) << '\n';
    }
}

void run_lattice(const FormalContext& ctx, const Options& opt, std::ostream& out) {
    std::string format = opt.output_format.empty() ? "dot" : opt.output_format;
    if (format != "dot" && format != "json")
        throw UsageError("unknown format '" + format + "' for lattice (expected dot or json)");
    if (opt.labeling != "full" && opt.labeling != "reduced")
        throw UsageError("unknown labeling '" + opt.labeling + "' (expected full or reduced)");

    ConceptLattice lattice = build_lattice(ctx);
    if (format == "dot") {
        DiagramOptions diagram;
        diagram.labeling = opt.labeling == "reduced" ? Labeling::reduced : Labeling::full;
        out << to_dot(lattice, ctx, diagram);
    } else {
        out << to_json(lattice, ctx);
    }
}

void run_implications(const FormalContext& ctx, const Options& opt, std::ostream& out) {
    if (!opt.output_format.empty() && opt.output_format != "text")
        throw UsageError("unknown format '" + opt.output_format +
                         "' for implications (expected text)");
    auto basis = stem_base(ctx);
    for (const auto& imp : basis) {
        if (opt.verify && !holds(ctx, imp))
            throw std::runtime_error("self-check failed: printed implication does not hold");
        out << '{' << attribute_names_line(ctx, imp.premise) << "} -> {"
            << attribute_names_line(ctx, imp.conclusion - imp.premise) << "}\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"concept lattice toolkit for object-attribute incidence data", "fca"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.set_config("--config")->description("key=value file with defaults for the flags below");
    app.add_option("--format", opt.output_format, "output format (lattice: dot|json; others: text)");
    app.add_option("--input-format", opt.input_format, "input format: cxt or csv (default: by extension)")
        ->check(CLI::IsMember({"cxt", "csv"}));
    app.add_option("--labeling", opt.labeling, "dot node labeling: full or reduced");
    app.add_option("--person-pattern", opt.person_pattern,
                   "regex; attributes matching it count as persons");
    app.add_flag("--verify", opt.verify, "re-check printed results against the context");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input_path, "context file (.cxt or .csv)")->required();
    };

    CLI::App* concepts_cmd = app.add_subcommand("concepts", "list every formal concept");
    add_input(concepts_cmd);

    CLI::App* lattice_cmd = app.add_subcommand("lattice", "emit the concept lattice as dot or json");
    add_input(lattice_cmd);

    CLI::App* implications_cmd =
        app.add_subcommand("implications", "list the minimal implication basis");
    add_input(implications_cmd);

    CLI::App* query_cmd = app.add_subcommand("query", "run one investigation query");
    add_input(query_cmd);
    query_cmd->require_subcommand(1);

    CLI::App* derive_cmd = query_cmd->add_subcommand(
        "derive", "attributes common to the given objects, or objects carrying the given attributes");
    CLI::Option* derive_objects_opt =
        derive_cmd->add_option("--objects", opt.derive_objects, "comma-joined object names")
            ->expected(0, 1);
    CLI::Option* derive_attributes_opt =
        derive_cmd->add_option("--attributes", opt.derive_attributes, "comma-joined attribute names")
            ->expected(0, 1);

    CLI::App* concept_cmd =
        query_cmd->add_subcommand("concept", "concept generated by the given attributes");
    concept_cmd->add_option("--attributes", opt.concept_attributes, "comma-joined attribute names")
        ->expected(0, 1);

    CLI::App* network_cmd =
        query_cmd->add_subcommand("network-group", "persons tied to one event");
    network_cmd->add_option("--event", opt.event_name, "event (object) name")->required();

    CLI::App* linked_cmd =
        query_cmd->add_subcommand("linked", "events exhibiting all given attributes");
    linked_cmd->add_option("--attributes", opt.linked_attributes, "comma-joined attribute names")
        ->expected(0, 1);

    CLI::App* subsumed_cmd = query_cmd->add_subcommand(
        "subsumed", "concepts whose intents subsume the one generated by the given attributes");
    subsumed_cmd->add_option("--attributes", opt.subsumed_attributes, "comma-joined attribute names")
        ->expected(0, 1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ostringstream body;
        const FormalContext ctx = load_context(opt);

        if (concepts_cmd->parsed()) {
            run_concepts(ctx, opt, body);
        } else if (lattice_cmd->parsed()) {
            run_lattice(ctx, opt, body);
        } else if (implications_cmd->parsed()) {
            run_implications(ctx, opt, body);
        } else if (query_cmd->parsed()) {
            if (derive_cmd->parsed()) {
                bool on_objects = derive_objects_opt->count() > 0;
                bool on_attributes = derive_attributes_opt->count() > 0;
                if (on_objects == on_attributes)
                    throw UsageError("derive needs exactly one of --objects or --attributes");
                if (on_objects)
                    body << attribute_names_line(ctx, ctx.derive(resolve_objects(ctx, opt.derive_objects)))
                         << '\n';
                else
                    body << object_names_line(ctx, ctx.derive(resolve_attributes(ctx, opt.derive_attributes)))
                         << '\n';
            } else if (concept_cmd->parsed()) {
                FormalConcept c =
                    concept_of_attributes(ctx, resolve_attributes(ctx, opt.concept_attributes));
                if (opt.verify) verify_concept(ctx, c);
                body << concept_fields(ctx, c) << '\n';
            } else if (network_cmd->parsed()) {
                auto event = ctx.object_index(opt.event_name);
                if (!event) fail_unknown_name("event", opt.event_name, ctx.object_names());
                AttributePartition partition = partition_by_pattern(ctx, opt.person_pattern);
                body << attribute_names_line(ctx, network_group(ctx, partition, *event)) << '\n';
            } else if (linked_cmd->parsed()) {
                body << object_names_line(ctx, linked_events(ctx, resolve_attributes(ctx, opt.linked_attributes)))
                     << '\n';
            } else if (subsumed_cmd->parsed()) {
                FormalConcept target =
                    concept_of_attributes(ctx, resolve_attributes(ctx, opt.subsumed_attributes));
                ConceptLattice lattice = build_lattice(ctx);
                for (const auto& c : subsumption_report(lattice, target)) {
                    if (opt.verify) verify_concept(ctx, c);
                    body << concept_fields(ctx, c) << '\n';
                }
            }
        }

        out << body.str();
        return 0;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::regex_error&) {
        err << "error: invalid person pattern '" << opt.person_pattern << "'\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fca
