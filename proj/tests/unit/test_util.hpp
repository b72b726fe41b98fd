#pragma once

#include "quaddyn/quadfield.hpp"

#include <ostream>

namespace quaddyn {

// readable gtest failure messages
inline void PrintTo(const QuadElem& x, std::ostream* os) { *os << x.to_string() << " [d=" << x.d() << "]"; }

}  // namespace quaddyn
