#pragma once

#include <stdexcept>
#include <string>

namespace mislab {

// Precondition violated by the caller (bad input).
inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

// Internal invariant violated (a bug, or an input that breaks a structural
// guarantee the algorithms rely on).
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error(what);
}

}  // namespace mislab
