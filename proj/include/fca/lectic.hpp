#pragma once

#include <cstddef>
#include <utility>

namespace fca {

// One step of closure enumeration in ascending lectic order (smaller indices
// are more significant; see Bitset::lectic_less). `current` must be closed
// under `close_of`. Advances it to the lectically next closed set and returns
// true, or returns false when `current` is the last one (the full universe).
//
// Works for any extensive, monotone, idempotent `close_of`; used both for
// context closures and for closure under an implication list.
template <class Set, class CloseFn>
bool next_closure(Set& current, CloseFn&& close_of) {
    for (std::size_t i = current.universe(); i-- > 0;) {
        if (current.contains(i)) {
            current.remove(i);
            continue;
        }
        Set seeded = current;
        seeded.add(i);
        Set closed = close_of(seeded);
        // Valid step only if closing pulled in nothing below i; otherwise the
        // candidate is not the lectic successor at position i.
        Set pulled = closed - seeded;
        if (pulled.find_first() > i) {
            current = std::move(closed);
            return true;
        }
    }
    return false;
}

} // namespace fca
