#include "fca/context.hpp"

#include <stdexcept>

namespace fca {

FormalContext::FormalContext(std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names,
                             std::vector<AttributeSet> rows)
    : object_names_(std::move(object_names)),
      attribute_names_(std::move(attribute_names)),
      rows_(std::move(rows)) {
    const std::size_t n_obj = object_names_.size();
    const std::size_t n_attr = attribute_names_.size();

    for (std::size_t g = 0; g < n_obj; ++g) {
        if (object_names_[g].empty()) throw std::invalid_argument("empty object name");
        if (!object_lookup_.emplace(object_names_[g], g).second)
            throw std::invalid_argument("duplicate object name '" + object_names_[g] + "'");
    }
    for (std::size_t m = 0; m < n_attr; ++m) {
        if (attribute_names_[m].empty()) throw std::invalid_argument("empty attribute name");
        if (!attribute_lookup_.emplace(attribute_names_[m], m).second)
            throw std::invalid_argument("duplicate attribute name '" + attribute_names_[m] + "'");
    }

    if (rows_.size() != n_obj)
        throw std::invalid_argument("incidence row count does not match object count");
    for (const auto& r : rows_)
        if (r.universe() != n_attr)
            throw std::invalid_argument("incidence row width does not match attribute count");

    columns_.assign(n_attr, ObjectSet(n_obj));
    for (std::size_t g = 0; g < n_obj; ++g)
        for (std::size_t m = rows_[g].find_first(); m != AttributeSet::npos;
             m = rows_[g].find_next(m))
            columns_[m].add(g);
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
    auto it = object_lookup_.find(std::string(name));
    if (it == object_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
    auto it = attribute_lookup_.find(std::string(name));
    if (it == attribute_lookup_.end()) return std::nullopt;
    return it->second;
}

AttributeSet FormalContext::derive(const ObjectSet& objects) const {
    AttributeSet shared = all_attributes();
    for (std::size_t g = objects.find_first(); g != ObjectSet::npos; g = objects.find_next(g))
        shared &= rows_[g];
    return shared;
}

ObjectSet FormalContext::derive(const AttributeSet& attributes) const {
    ObjectSet carriers = all_objects();
    for (std::size_t m = attributes.find_first(); m != AttributeSet::npos;
         m = attributes.find_next(m))
        carriers &= columns_[m];
    return carriers;
}

} // namespace fca
