#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/simplicial_complex.hpp"
#include "wedgecalc/smith.hpp"

namespace wedgecalc {

/**
 * Alternating-sign boundary matrix from d-faces (columns) to (d-1)-faces
 * (rows), over the canonical face orderings. d = 0 uses the augmented
 * chain complex, so vertices map to the empty face.
 */
struct BoundaryMatrix {
    int dim = 0;
    std::vector<Face> row_faces;
    std::vector<Face> col_faces;
    IntMatrix entries;
};

namespace detail {

inline std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& k) {
    // Index d+1 holds the d-faces; index 0 holds the empty face.
    std::vector<std::vector<Face>> by_card(static_cast<std::size_t>(k.dimension()) + 2);
    for (const Face& f : k.faces()) by_card[f.cardinality()].push_back(f);
    return by_card;
}

} // namespace detail

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 0 || d > k.dimension())
        fail(errc::k_out_of_range, "no boundary map in dimension " + std::to_string(d));
    auto by_card = detail::faces_by_dimension(k);
    BoundaryMatrix out;
    out.dim = d;
    out.row_faces = by_card[static_cast<std::size_t>(d)];
    out.col_faces = by_card[static_cast<std::size_t>(d) + 1];

    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < out.row_faces.size(); ++i) row_index[out.row_faces[i]] = i;

    out.entries = IntMatrix(out.row_faces.size(), out.col_faces.size());
    for (std::size_t j = 0; j < out.col_faces.size(); ++j) {
        const auto& verts = out.col_faces[j].vertices();
        int sign = 1;
        for (std::size_t skip = 0; skip < verts.size(); ++skip) {
            std::vector<int> facet;
            facet.reserve(verts.size() - 1);
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != skip) facet.push_back(verts[i]);
            out.entries.at(row_index.at(Face(std::move(facet))), j) = sign;
            sign = -sign;
        }
    }
    return out;
}

/**
 * Reduced Betti numbers and torsion of a complex, from Smith normal forms
 * of the augmented boundary matrices.
 */
struct HomologyProfile {
    std::vector<long long> reduced_betti;      // index d = dimension, d >= 0
    std::map<int, std::vector<BigInt>> torsion; // invariant factors > 1 per dimension

    long long betti(int d) const {
        if (d < 0 || d >= static_cast<int>(reduced_betti.size())) return 0;
        return reduced_betti[static_cast<std::size_t>(d)];
    }

    bool has_torsion() const { return !torsion.empty(); }

    long long reduced_euler_characteristic() const {
        long long chi = 0;
        int sign = 1;
        for (long long b : reduced_betti) {
            chi += sign * b;
            sign = -sign;
        }
        return chi;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t d = 0; d < reduced_betti.size(); ++d) {
            if (d) out << ' ';
            out << "b" << d << "=" << reduced_betti[d];
        }
        if (reduced_betti.empty()) out << "trivial";
        for (const auto& [d, factors] : torsion) {
            out << " torsion[" << d << "]=";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << ',';
                out << factors[i].str();
            }
        }
        return out.str();
    }
};

inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
    bool any_vertex = false;
    for (face_mask m : k.maximal_masks())
        if (m != 0) any_vertex = true;
    if (!any_vertex)
        fail(errc::void_complex, "homology needs at least one vertex face");

    int top = k.dimension();
    auto by_card = detail::faces_by_dimension(k);

    // rank_of[d] = rank of the boundary map leaving dimension d.
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<BigInt>> factors_of(static_cast<std::size_t>(top) + 2);
    for (int d = 0; d <= top; ++d) {
        SmithResult snf = smith_normal_form(boundary_matrix(k, d).entries);
        rank_of[static_cast<std::size_t>(d)] = snf.rank;
        factors_of[static_cast<std::size_t>(d)] = std::move(snf.invariant_factors);
    }

    HomologyProfile out;
    out.reduced_betti.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        auto du = static_cast<std::size_t>(d);
        long long n_d = static_cast<long long>(by_card[du + 1].size());
        out.reduced_betti[du] = n_d - static_cast<long long>(rank_of[du]) -
                                static_cast<long long>(rank_of[du + 1]);
        if (d < top) {
            std::vector<BigInt> nontrivial;
            for (const BigInt& f : factors_of[du + 1])
                if (f > 1) nontrivial.push_back(f);
            if (!nontrivial.empty()) out.torsion[d] = std::move(nontrivial);
        }
    }
    return out;
}

} // namespace wedgecalc
