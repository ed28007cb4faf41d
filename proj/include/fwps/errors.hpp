#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fwps {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_matrix_error : error {
    singular_matrix_error() : error("matrix is singular") {}
};

struct not_full_rank_error : error {
    not_full_rank_error() : error("vectors do not span the full lattice rank") {}
};

struct not_full_dim_error : error {
    not_full_dim_error() : error("simplex is not full-dimensional") {}
};

struct origin_not_interior_error : error {
    origin_not_interior_error() : error("origin is not in the strict interior") {}
};

struct non_primitive_vertex_error : error {
    std::size_t vertex;
    explicit non_primitive_vertex_error(std::size_t v)
        : error("vertex " + std::to_string(v) + " is not a primitive lattice point"), vertex(v) {}
};

struct wrong_interior_count_error : error {
    std::size_t count;
    explicit wrong_interior_count_error(std::size_t c)
        : error("expected exactly one interior lattice point, found " + std::to_string(c)),
          count(c) {}
};

struct enumeration_cap_exceeded_error : error {
    enumeration_cap_exceeded_error() : error("lattice point enumeration cap exceeded") {}
};

struct dimension_mismatch_error : error {
    dimension_mismatch_error() : error("dimension mismatch") {}
};

struct factorial_guard_error : error {
    factorial_guard_error() : error("dimension too large for factorial vertex search") {}
};

struct index_out_of_range_error : error {
    explicit index_out_of_range_error(const std::string& what) : error(what) {}
};

struct not_well_formed_error : error {
    not_well_formed_error() : error("weight system is not well-formed") {}
};

struct non_integral_bound_error : error {
    non_integral_bound_error() : error("bound value is not an integer") {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace fwps
