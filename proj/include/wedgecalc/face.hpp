#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"

namespace wedgecalc {

/**
 * A single simplex given by its vertex labels, kept strictly increasing.
 * The empty face is a valid value and is distinct from "no face".
 */
class Face {
public:
    Face() = default;

    explicit Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i] <= 0)
                fail(errc::vertex_out_of_range,
                     "vertex label " + std::to_string(vertices_[i]) + " is not positive");
            if (i > 0 && vertices_[i] == vertices_[i - 1])
                fail(errc::duplicate_vertex_in_face,
                     "vertex " + std::to_string(vertices_[i]) + " repeated");
        }
    }

    Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const noexcept { return vertices_; }
    std::size_t cardinality() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    /// Geometric dimension: cardinality - 1, so the empty face has dimension -1.
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

    bool contains(int v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool is_subset_of(const Face& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    friend bool operator==(const Face& a, const Face& b) { return a.vertices_ == b.vertices_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

    /// Canonical order: by cardinality, then lexicographic on the label tuple.
    friend bool operator<(const Face& a, const Face& b) {
        if (a.vertices_.size() != b.vertices_.size())
            return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) out << ',';
            out << vertices_[i];
        }
        out << '}';
        return out.str();
    }

private:
    std::vector<int> vertices_;
};

} // namespace wedgecalc
