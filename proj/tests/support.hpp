#pragma once

// Shared fixtures and reference oracles for the test binaries.
//
// The oracles deliberately use the most literal formulation available —
// double loops over the raw incidence relation, exhaustive subset scans,
// restart-until-stable fixpoints, sorted-vector subset tests — so that a bug
// in the engine's bit-level shortcuts cannot hide inside the checker too.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fca/cli.hpp"
#include "fca/context.hpp"
#include "fca/context_io.hpp"
#include "fca/implications.hpp"
#include "fca/lattice.hpp"

namespace fca {

// Test-only printers so assertion failures show set contents.
template <class Tag>
inline std::ostream& operator<<(std::ostream& os, const IndexSet<Tag>& s) {
    os << '{';
    bool first = true;
    for (std::size_t i : s.members()) {
        if (!first) os << ' ';
        os << i;
        first = false;
    }
    return os << '}';
}

inline std::ostream& operator<<(std::ostream& os, const FormalConcept& c) {
    return os << '(' << c.extent << ", " << c.intent << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Implication& imp) {
    return os << imp.premise << " -> " << imp.conclusion;
}

} // namespace fca

namespace testutil {

using fca::AttributeSet;
using fca::FormalConcept;
using fca::FormalContext;
using fca::Implication;
using fca::ObjectSet;

// ---------------------------------------------------------------------------
// fixture plumbing

inline std::string& data_dir() {
    static std::string dir = FCA_DATA_DIR;
    return dir;
}

inline std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open test data file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline FormalContext load_fixture(const std::string& name) {
    const std::string text = read_file(data_path(name));
    return name.ends_with(".csv") ? fca::parse_csv_crosstable(text) : fca::parse_cxt(text);
}

inline std::vector<std::string> default_object_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g + 1));
    return names;
}

inline std::vector<std::string> default_attribute_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (n <= 26)
            names.push_back(std::string(1, static_cast<char>('a' + m)));
        else
            names.push_back("m" + std::to_string(m + 1));
    }
    return names;
}

// Context from incidence strings: 'X', 'x', or '1' marks incidence, anything
// else a blank. Default names are g1.. for objects, a.. for attributes.
inline FormalContext make_context(const std::vector<std::string>& grid,
                                  std::vector<std::string> object_names = {},
                                  std::vector<std::string> attribute_names = {}) {
    const std::size_t n_obj = grid.size();
    const std::size_t n_attr = n_obj == 0 ? attribute_names.size() : grid[0].size();
    std::vector<AttributeSet> rows;
    rows.reserve(n_obj);
    for (const auto& line : grid) {
        if (line.size() != n_attr) throw std::runtime_error("make_context: ragged grid");
        AttributeSet row(n_attr);
        for (std::size_t m = 0; m < n_attr; ++m)
            if (line[m] == 'X' || line[m] == 'x' || line[m] == '1') row.add(m);
        rows.push_back(std::move(row));
    }
    if (object_names.empty()) object_names = default_object_names(n_obj);
    if (attribute_names.empty()) attribute_names = default_attribute_names(n_attr);
    return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
}

inline ObjectSet objects_of(const FormalContext& ctx, const std::vector<std::string>& names) {
    ObjectSet s(ctx.object_count());
    for (const auto& n : names) {
        auto idx = ctx.object_index(n);
        if (!idx) throw std::runtime_error("objects_of: unknown name " + n);
        s.add(*idx);
    }
    return s;
}

inline AttributeSet attributes_of(const FormalContext& ctx, const std::vector<std::string>& names) {
    AttributeSet s(ctx.attribute_count());
    for (const auto& n : names) {
        auto idx = ctx.attribute_index(n);
        if (!idx) throw std::runtime_error("attributes_of: unknown name " + n);
        s.add(*idx);
    }
    return s;
}

inline ObjectSet object_subset(std::size_t universe, std::uint64_t mask) {
    ObjectSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
        if ((mask >> i) & 1U) s.add(i);
    return s;
}

inline AttributeSet attribute_subset(std::size_t universe, std::uint64_t mask) {
    AttributeSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
        if ((mask >> i) & 1U) s.add(i);
    return s;
}

// ---------------------------------------------------------------------------
// random generators (seeded by the caller; every suite pins its own seed)

inline FormalContext random_context(std::mt19937_64& rng, std::size_t n_objects,
                                    std::size_t n_attributes, double density) {
    std::bernoulli_distribution incident(density);
    std::vector<AttributeSet> rows(n_objects, AttributeSet(n_attributes));
    for (auto& row : rows)
        for (std::size_t m = 0; m < n_attributes; ++m)
            if (incident(rng)) row.add(m);
    return FormalContext(default_object_names(n_objects), default_attribute_names(n_attributes),
                         std::move(rows));
}

inline ObjectSet random_object_subset(std::mt19937_64& rng, std::size_t universe,
                                      double density = 0.5) {
    std::bernoulli_distribution in(density);
    ObjectSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        if (in(rng)) s.add(i);
    return s;
}

inline AttributeSet random_attribute_subset(std::mt19937_64& rng, std::size_t universe,
                                            double density = 0.5) {
    std::bernoulli_distribution in(density);
    AttributeSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        if (in(rng)) s.add(i);
    return s;
}

// ---------------------------------------------------------------------------
// reference oracles

// Derivation by scanning the raw incidence relation, one cell at a time.
inline AttributeSet naive_derive(const FormalContext& ctx, const ObjectSet& objects) {
    AttributeSet shared(ctx.attribute_count());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        bool in_all = true;
        for (std::size_t g = 0; g < ctx.object_count(); ++g)
            if (objects.contains(g) && !ctx.incident(g, m)) {
                in_all = false;
                break;
            }
        if (in_all) shared.add(m);
    }
    return shared;
}

inline ObjectSet naive_derive(const FormalContext& ctx, const AttributeSet& attrs) {
    ObjectSet carriers(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        bool has_all = true;
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            if (attrs.contains(m) && !ctx.incident(g, m)) {
                has_all = false;
                break;
            }
        if (has_all) carriers.add(g);
    }
    return carriers;
}

inline AttributeSet naive_close(const FormalContext& ctx, const AttributeSet& attrs) {
    return naive_derive(ctx, naive_derive(ctx, attrs));
}

inline ObjectSet naive_close(const FormalContext& ctx, const ObjectSet& objects) {
    return naive_derive(ctx, naive_derive(ctx, objects));
}

// Every concept, found by closing every one of the 2^|G| object subsets,
// deduplicated and sorted into canonical (ascending lectic intent) order.
// Requires |G| < 64.
inline std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx) {
    const std::size_t n = ctx.object_count();
    if (n >= 64) throw std::runtime_error("brute_force_concepts: context too large");
    std::vector<FormalConcept> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ObjectSet seed = object_subset(n, mask);
        AttributeSet intent = naive_derive(ctx, seed);
        ObjectSet extent = naive_derive(ctx, intent);
        found.push_back({std::move(extent), std::move(intent)});
    }
    std::sort(found.begin(), found.end(), [](const FormalConcept& a, const FormalConcept& b) {
        return AttributeSet::lectic_less(a.intent, b.intent);
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// Implication closure by restarting the scan from the top after every change.
inline AttributeSet naive_implication_closure(const std::vector<Implication>& imps,
                                              AttributeSet x) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& imp : imps) {
            if (imp.premise.subset_of(x) && !imp.conclusion.subset_of(x)) {
                x |= imp.conclusion;
                changed = true;
            }
        }
    }
    return x;
}

// Subset test over sorted index vectors, avoiding the bitset implementation.
inline bool naive_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool naive_leq(const FormalConcept& a, const FormalConcept& b) {
    return naive_subset(a.extent.members(), b.extent.members());
}

// Covering pairs (child, parent) of the concept order, from the definition:
// child < parent with nothing strictly between. Sorted by child, then parent.
inline std::vector<std::pair<std::size_t, std::size_t>> reduction_pairs(
    const std::vector<FormalConcept>& cs) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = cs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !naive_leq(cs[i], cs[j])) continue;
            bool between = false;
            for (std::size_t k = 0; k < n && !between; ++k)
                if (k != i && k != j && naive_leq(cs[i], cs[k]) && naive_leq(cs[k], cs[j]))
                    between = true;
            if (!between) pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

inline std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(
    const fca::ConceptLattice& lattice) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t child = 0; child < lattice.size(); ++child)
        for (std::size_t parent : lattice.upper_covers(child)) pairs.emplace_back(child, parent);
    return pairs;
}

// ---------------------------------------------------------------------------
// CLI plumbing

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli_capture(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = fca::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

// Scratch file that disappears with the test. Names carry a per-process
// random tag so concurrently running test binaries cannot collide.
class TempFile {
public:
    TempFile(const std::string& stem, const std::string& contents) {
        path_ = std::filesystem::temp_directory_path() /
                (unique_tag() + "_" + std::to_string(counter()++) + "_" + stem);
        std::ofstream out(path_, std::ios::binary);
        out << contents;
        if (!out) throw std::runtime_error("cannot write scratch file " + path_.string());
    }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }

    std::string path() const { return path_.string(); }

private:
    static std::string& unique_tag() {
        static std::string tag = [] {
            std::random_device rd;
            return "fca_test_" + std::to_string(rd());
        }();
        return tag;
    }

    static std::size_t& counter() {
        static std::size_t n = 0;
        return n;
    }

    std::filesystem::path path_;
};

} // namespace testutil
