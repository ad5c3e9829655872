#pragma once

#include <map>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/simplicial_complex.hpp"

namespace wedgecalc {

/// Relabeling produced by the simplicial wedge: each original vertex maps
/// to the consecutive block of fresh labels standing for its copies.
struct WedgeRelabeling {
    std::map<int, std::vector<int>> replacements;

    std::vector<int> all_new_labels() const {
        std::vector<int> out;
        for (const auto& [old_label, copies] : replacements)
            out.insert(out.end(), copies.begin(), copies.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct WedgeResult {
    SimplicialComplex complex;
    WedgeRelabeling relabeling;
};

/**
 * Iterated simplicial wedge K(J): each vertex v is doubled multiplicity(v)-1
 * times, one doubling replacing v by an edge joined to its link together
 * with two loose copies joined to the deletion of v. The doubled copies of
 * v receive fresh consecutive integer labels, blocks ordered by v.
 */
inline WedgeResult simplicial_wedge(const SimplicialComplex& k,
                                    const std::map<int, int>& multiplicities) {
    for (int v : k.vertex_labels()) {
        auto it = multiplicities.find(v);
        if (it == multiplicities.end())
            fail(errc::missing_multiplicity, "vertex " + std::to_string(v) + " has no multiplicity");
        if (it->second <= 0)
            fail(errc::nonpositive_multiplicity,
                 "vertex " + std::to_string(v) + " has multiplicity " + std::to_string(it->second));
        if (!k.has_vertex_face(v))
            fail(errc::missing_singleton, "vertex " + std::to_string(v) + " is not a face");
    }

    // Work with temporary labels; copies[v] lists v's copies in creation order.
    SimplicialComplex current = k;
    std::map<int, std::vector<int>> copies;
    int next_fresh = 0;
    for (int v : k.vertex_labels()) {
        copies[v] = {v};
        next_fresh = std::max(next_fresh, v);
    }
    ++next_fresh;

    for (int v : k.vertex_labels()) {
        for (int step = 1; step < multiplicities.at(v); ++step) {
            int fresh = next_fresh++;
            copies[v].push_back(fresh);

            // Always double the original copy; the result is independent of
            // which copy gets doubled.
            SimplicialComplex vertex_link = link(current, Face{v});
            SimplicialComplex vertex_rest = restriction(current, [&] {
                std::vector<int> keep;
                for (int w : current.vertex_labels())
                    if (w != v) keep.push_back(w);
                return keep;
            }());

            SimplicialComplex edge_pair = build_complex({v, fresh}, {Face{v, fresh}});
            SimplicialComplex point_pair =
                build_complex({v, fresh}, {Face{v}, Face{fresh}});

            SimplicialComplex a = join_complexes(edge_pair, vertex_link);
            SimplicialComplex b = join_complexes(point_pair, vertex_rest);

            std::vector<int> labels = current.vertex_labels();
            labels.push_back(fresh);
            std::sort(labels.begin(), labels.end());
            SimplicialComplex table = SimplicialComplex::from_masks(labels, {});
            std::vector<face_mask> gens;
            for (const Face& f : a.maximal_faces()) gens.push_back(table.mask_of(f));
            for (const Face& f : b.maximal_faces()) gens.push_back(table.mask_of(f));
            current = SimplicialComplex::from_masks(std::move(labels), std::move(gens));
        }
    }

    // Stable renumbering 1..m: blocks ordered by original vertex, copies in
    // creation order within each block.
    std::map<int, int> temp_to_final;
    WedgeRelabeling relabeling;
    int next_label = 1;
    for (int v : k.vertex_labels()) {
        std::vector<int> block;
        for (int tmp : copies[v]) {
            temp_to_final[tmp] = next_label;
            block.push_back(next_label);
            ++next_label;
        }
        relabeling.replacements[v] = std::move(block);
    }

    std::vector<int> final_labels;
    for (int v : current.vertex_labels()) final_labels.push_back(temp_to_final.at(v));
    std::sort(final_labels.begin(), final_labels.end());
    SimplicialComplex table = SimplicialComplex::from_masks(final_labels, {});
    std::vector<face_mask> gens;
    for (const Face& f : current.maximal_faces()) {
        std::vector<int> verts;
        verts.reserve(f.cardinality());
        for (int v : f.vertices()) verts.push_back(temp_to_final.at(v));
        gens.push_back(table.mask_of(Face(std::move(verts))));
    }
    SimplicialComplex out = SimplicialComplex::from_masks(std::move(final_labels), std::move(gens));
    return WedgeResult{std::move(out), std::move(relabeling)};
}

} // namespace wedgecalc
