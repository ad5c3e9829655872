#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wedgecalc/bbcg.hpp"
#include "wedgecalc/decomposer.hpp"
#include "wedgecalc/errors.hpp"
#include "wedgecalc/wedge_algebra.hpp"

namespace wedgecalc {

/// Assignment of a sphere dimension >= 1 to each vertex label.
struct SphereAssignment {
    std::map<int, int> dims;

    static SphereAssignment all_ones(const std::vector<int>& labels) {
        SphereAssignment a;
        for (int v : labels) a.dims[v] = 1;
        return a;
    }

    int dim(int label) const {
        auto it = dims.find(label);
        if (it == dims.end())
            fail(errc::missing_dimension, "no sphere dimension for X" + std::to_string(label));
        if (it->second < 1)
            fail(errc::missing_dimension,
                 "sphere dimension for X" + std::to_string(label) + " must be at least 1");
        return it->second;
    }
};

/// Multiset of sphere dimensions, e.g. the homotopy type of a moment-angle
/// complex as a wedge of spheres.
using SphereMultiset = std::map<int, Mult>;

/// Evaluate each summand at spheres: a j-fold suspension of a smash of
/// spheres is the sphere of dimension j plus the sum of the factors.
inline SphereMultiset specialize(const Decomposition& d, const SphereAssignment& a) {
    SphereMultiset out;
    for (const auto& [s, m] : d.terms()) {
        int dim = s.suspension();
        for (int i : s.indices().vertices()) dim += a.dim(i);
        out[dim] += m;
    }
    return out;
}

/// Integer polynomial in t, exponent -> coefficient.
struct PoincarePolynomial {
    std::map<int, Mult> coefficients;

    std::string to_string() const {
        std::string out;
        for (const auto& [exp, coeff] : coefficients) {
            if (coeff == 0) continue;
            if (!out.empty()) out += '+';
            if (exp == 0) {
                out += coeff.str();
                continue;
            }
            if (coeff != 1) out += coeff.str();
            out += (exp == 1) ? "t" : "t^" + std::to_string(exp);
        }
        return out.empty() ? "0" : out;
    }
};

struct MomentAngleResult {
    SphereMultiset spheres;
    PoincarePolynomial poincare;
    Validity validity = Validity::exact;
};

/**
 * Moment-angle homotopy type: specialize the decomposition at all sphere
 * dimensions 1. For a shifted complex this is exact; otherwise the
 * suspension-level answer is computed through the homology route and must
 * be acknowledged by the caller.
 */
inline MomentAngleResult moment_angle(const SimplicialComplex& k, bool allow_suspended_only,
                                      std::size_t max_vertices = 20) {
    MomentAngleResult out;
    Decomposition d;

    // A shifted order found under any labeling gives the exact answer; the
    // sphere dimensions do not depend on the labels, so decompose the
    // relabeled complex.
    std::optional<VertexOrder> order;
    if (is_shifted(k, VertexOrder::natural(k.vertex_labels())).shifted) {
        order = VertexOrder::natural(k.vertex_labels());
    } else if (k.vertex_count() <= kBbcgShiftRecheckLimit) {
        order = find_shifted_order(k);
    }

    if (order) {
        std::map<int, int> rank_label;
        for (std::size_t r = 0; r < order->labels_by_rank().size(); ++r)
            rank_label[order->labels_by_rank()[r]] = static_cast<int>(r) + 1;
        std::vector<int> new_labels;
        std::vector<Face> gens;
        for (int v : k.vertex_labels()) new_labels.push_back(rank_label.at(v));
        for (const Face& f : k.maximal_faces()) {
            std::vector<int> verts;
            for (int v : f.vertices()) verts.push_back(rank_label.at(v));
            gens.push_back(Face(std::move(verts)));
        }
        SimplicialComplex relabeled = build_complex(std::move(new_labels), gens);
        DecomposeOptions opts;
        opts.build_trace = false;
        d = decompose(relabeled, opts).decomposition;
        out.validity = Validity::exact;
        out.spheres = specialize(d, SphereAssignment::all_ones(relabeled.vertex_labels()));
    } else {
        if (!allow_suspended_only)
            fail(errc::not_shifted,
                 "not shifted under any order; rerun acknowledging a suspension-level answer");
        BbcgOptions options;
        options.max_vertices = max_vertices;
        BbcgResult b = bbcg(k, options);
        d = std::move(b.decomposition);
        out.validity = b.validity;
        out.spheres = specialize(d, SphereAssignment::all_ones(k.vertex_labels()));
    }

    out.poincare.coefficients[0] = 1; // the wedge point
    for (const auto& [dim, m] : out.spheres) out.poincare.coefficients[dim] += m;
    return out;
}

} // namespace wedgecalc
