#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wedgecalc/simplicial_complex.hpp"

namespace wedgecalc {

namespace detail {

/// Face sets are tracked as sorted mask vectors over positions 0..n-1
/// (position i = i-th smallest label).
using MaskSet = std::set<face_mask>;

/// A new face can join a natural-order shifted family when its facets are
/// present and every single-vertex move to a smaller position lands inside.
inline bool addable_keeping_shifted(const MaskSet& faces, face_mask candidate) {
    face_mask rest = candidate;
    while (rest) {
        unsigned nu = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        face_mask without = candidate & ~(face_mask{1} << nu);
        if (!faces.count(without)) return false; // facet missing
        for (unsigned smaller = 0; smaller < nu; ++smaller) {
            face_mask bit = face_mask{1} << smaller;
            if (candidate & bit) continue;
            if (!faces.count(without | bit)) return false; // shifted move missing
        }
    }
    return true;
}

inline std::vector<face_mask> valid_additions(const MaskSet& faces, std::size_t n) {
    std::vector<face_mask> out;
    for (face_mask m = 1; m < (face_mask{1} << n); ++m) {
        if (std::popcount(m) < 2 || faces.count(m)) continue;
        if (addable_keeping_shifted(faces, m)) out.push_back(m);
    }
    return out;
}

inline SimplicialComplex complex_from_mask_set(const std::vector<int>& labels,
                                               const MaskSet& faces) {
    std::vector<face_mask> gens(faces.begin(), faces.end());
    return SimplicialComplex::from_masks(labels, std::move(gens));
}

} // namespace detail

/**
 * All complexes on exactly the given labels that contain every singleton
 * and are shifted under the natural order, found by closing the vertex-only
 * complex under single-face additions that preserve the shifted property.
 * Every such complex is reachable this way: peeling a maximal face that no
 * other face dominates reverses one addition.
 */
inline std::vector<SimplicialComplex> enumerate_natural_shifted(const std::vector<int>& labels) {
    std::size_t n = labels.size();
    detail::MaskSet start;
    start.insert(0);
    for (std::size_t i = 0; i < n; ++i) start.insert(face_mask{1} << i);

    std::set<detail::MaskSet> seen{start};
    std::vector<detail::MaskSet> frontier{start};
    while (!frontier.empty()) {
        std::vector<detail::MaskSet> next;
        for (const auto& faces : frontier) {
            for (face_mask add : detail::valid_additions(faces, n)) {
                detail::MaskSet grown = faces;
                grown.insert(add);
                if (seen.insert(grown).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }

    std::vector<SimplicialComplex> out;
    out.reserve(seen.size());
    for (const auto& faces : seen) out.push_back(detail::complex_from_mask_set(labels, faces));
    return out;
}

/// Random complex on the given labels, shifted under the natural order and
/// containing all singletons: a random walk of shift-preserving additions.
template <typename Rng>
SimplicialComplex random_natural_shifted(Rng& rng, const std::vector<int>& labels,
                                         std::size_t max_additions) {
    std::size_t n = labels.size();
    detail::MaskSet faces;
    faces.insert(0);
    for (std::size_t i = 0; i < n; ++i) faces.insert(face_mask{1} << i);

    for (std::size_t step = 0; step < max_additions; ++step) {
        std::vector<face_mask> options = detail::valid_additions(faces, n);
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        faces.insert(options[pick(rng)]);
    }
    return detail::complex_from_mask_set(labels, faces);
}

} // namespace wedgecalc
