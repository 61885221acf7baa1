#pragma once

#include <stdexcept>
#include <utility>

#include "pallino/error.hpp"
#include "pallino/grid.hpp"
#include "pallino/rng.hpp"

namespace testutil {

/// Runs `fn`, returns the error kind it throws. Fails the test by throwing
/// when no pallino::Error comes out.
template <typename F>
pallino::errc code_of(F&& fn) {
    try {
        std::forward<F>(fn)();
    } catch (const pallino::Error& e) {
        return e.code();
    }
    throw std::logic_error("expected a pallino::Error, none was thrown");
}

inline pallino::Color random_color(pallino::SplitMix64& rng) {
    return pallino::kAllColors[static_cast<std::size_t>(pallino::draw_below(rng, 5))];
}

}  // namespace testutil
