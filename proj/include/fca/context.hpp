#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fca/bitset.hpp"

namespace fca {

// Index set over one side of a context. The tag keeps object sets and
// attribute sets from mixing at compile time.
template <class Tag>
class IndexSet {
public:
    static constexpr std::size_t npos = Bitset::npos;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe) {}

    static IndexSet full(std::size_t universe) {
        IndexSet s;
        s.bits_ = Bitset::full(universe);
        return s;
    }

    static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
        IndexSet s(universe);
        for (std::size_t i : members) s.add(i);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_full() const { return bits_.all(); }

    bool contains(std::size_t i) const { return bits_.test(i); }
    void add(std::size_t i) { bits_.set(i); }
    void remove(std::size_t i) { bits_.reset(i); }

    bool subset_of(const IndexSet& o) const { return bits_.is_subset_of(o.bits_); }

    std::size_t find_first() const { return bits_.find_first(); }
    std::size_t find_next(std::size_t i) const { return bits_.find_next(i); }

    // ascending index order
    std::vector<std::size_t> members() const { return bits_.indices(); }

    IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
    IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
    IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }

    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool operator==(const IndexSet&) const = default;

    static bool lectic_less(const IndexSet& a, const IndexSet& b) {
        return Bitset::lectic_less(a.bits_, b.bits_);
    }

    const Bitset& bits() const { return bits_; }

private:
    Bitset bits_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

// A formal context: named objects, named attributes, and the incidence
// relation between them. Immutable once constructed; every query on it is a
// pure function, so concurrent readers need no synchronization.
class FormalContext {
public:
    // rows[g] holds the attributes of object g. Throws std::invalid_argument
    // on duplicate or empty names, or rows not matching the name lists.
    FormalContext(std::vector<std::string> object_names,
                  std::vector<std::string> attribute_names,
                  std::vector<AttributeSet> rows);

    std::size_t object_count() const { return object_names_.size(); }
    std::size_t attribute_count() const { return attribute_names_.size(); }

    const std::vector<std::string>& object_names() const { return object_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::string& object_name(std::size_t g) const { return object_names_.at(g); }
    const std::string& attribute_name(std::size_t m) const { return attribute_names_.at(m); }

    std::optional<std::size_t> object_index(std::string_view name) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].contains(m); }

    // attributes of object g / objects carrying attribute m
    const AttributeSet& row(std::size_t g) const { return rows_.at(g); }
    const ObjectSet& column(std::size_t m) const { return columns_.at(m); }

    ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
    AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

    // Derivation: attributes shared by every object in A. The empty set
    // derives to the full opposite side (universally quantified over nothing).
    AttributeSet derive(const ObjectSet& objects) const;

    // Derivation: objects carrying every attribute in B.
    ObjectSet derive(const AttributeSet& attributes) const;

    // Double derivation. Extensive, monotone, idempotent.
    AttributeSet close(const AttributeSet& attributes) const { return derive(derive(attributes)); }
    ObjectSet close(const ObjectSet& objects) const { return derive(derive(objects)); }

    bool operator==(const FormalContext& o) const {
        return object_names_ == o.object_names_ && attribute_names_ == o.attribute_names_ &&
               rows_ == o.rows_;
    }

private:
    std::vector<std::string> object_names_;
    std::vector<std::string> attribute_names_;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> columns_;
    std::unordered_map<std::string, std::size_t> object_lookup_;
    std::unordered_map<std::string, std::size_t> attribute_lookup_;
};

} // namespace fca
