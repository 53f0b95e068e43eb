#ifndef MHL_ERRORS_HPP
#define MHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhl {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A group element and a root label of incompatible kinds were combined.
struct kind_mismatch_error : error {
    explicit kind_mismatch_error(const std::string& what) : error(what) {}
};

// Partition is not regular (parts not strictly decreasing and positive).
struct regularity_error : error {
    explicit regularity_error(const std::string& what) : error(what) {}
};

// Partition has the wrong number of parts for the requested rank.
struct shape_error : error {
    explicit shape_error(const std::string& what) : error(what) {}
};

// A pair of adjacent columns admits no valid reflection decomposition.
struct adjacency_error : error {
    explicit adjacency_error(const std::string& what) : error(what) {}
};

// A denominator factor vanishes at the requested evaluation point.
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

// An internal invariant failed (parity, integrality, exact division).
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

// A polynomial expected to be symmetric under the group action is not.
struct symmetry_error : error {
    explicit symmetry_error(const std::string& what) : error(what) {}
};

} // namespace mhl

#endif
