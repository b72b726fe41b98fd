#pragma once

#include <stdexcept>
#include <string>

namespace quaddyn {

// Bad input: zero where a nonzero is required, non-prime modulus, wrong field...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured bound (depth, vertex count, budget) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exactness check failed (e.g. a division that should have been exact).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace quaddyn
