#pragma once

#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/shifted.hpp"
#include "wedgecalc/simplicial_complex.hpp"
#include "wedgecalc/simplicial_wedge.hpp"
#include "wedgecalc/wedge_algebra.hpp"

namespace wedgecalc {

inline Mult binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Mult r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

enum class TraceAction { base_case, cone_reduction, adjoin_face, split_isolated, glue_combine };

constexpr std::string_view trace_action_name(TraceAction a) {
    switch (a) {
        case TraceAction::base_case: return "base-case";
        case TraceAction::cone_reduction: return "cone-reduction";
        case TraceAction::adjoin_face: return "adjoin-face";
        case TraceAction::split_isolated: return "split-isolated";
        case TraceAction::glue_combine: return "glue";
    }
    return "?";
}

/// One step of the decomposition run. Adjoin records satisfy
/// state_after = (state_before minus subtracted) plus added.
struct TraceRecord {
    std::size_t complex_id = 0;
    TraceAction action = TraceAction::base_case;
    std::optional<Face> face; // adjoined face, cone vertex, or split-off label set
    Decomposition state_before;
    Decomposition subtracted;
    Decomposition added;
    Decomposition state_after;
};

struct DecompositionTrace {
    std::vector<std::string> snapshots; // rendered complexes, index = complex_id
    std::vector<TraceRecord> records;

    std::size_t add_snapshot(const SimplicialComplex& k) {
        snapshots.push_back(k.to_string());
        return snapshots.size() - 1;
    }
};

/**
 * Exchange one filtration face: the cofibre argument removes the half-smash
 * expansion of the face's boundary join and adds the expansion of the face
 * coned off at the minimal vertex. `ambient` is the full label set of the
 * complex being decomposed.
 */
inline std::pair<Decomposition, TraceRecord> adjoin_step(const Decomposition& state, int v,
                                                         const Face& tau,
                                                         const std::vector<int>& ambient) {
    if (tau.cardinality() < 2)
        fail(errc::not_a_suspension,
             "adjoin face " + tau.to_string() + " has fewer than two vertices");
    if (tau.contains(v) || v >= tau.vertices().front())
        fail(errc::not_shifted,
             "adjoin vertex " + std::to_string(v) + " does not precede " + tau.to_string());

    std::vector<int> extras;
    for (int w : ambient)
        if (w != v && !tau.contains(w)) extras.push_back(w);

    int k = static_cast<int>(tau.cardinality());
    Decomposition sub = half_smash_expand(Summand(k - 1, tau), extras);

    std::vector<int> coned = tau.vertices();
    coned.push_back(v);
    Decomposition add = half_smash_expand(Summand(k, Face(std::move(coned))), extras);

    TraceRecord rec;
    rec.action = TraceAction::adjoin_face;
    rec.face = tau;
    rec.state_before = state;
    rec.subtracted = sub;
    rec.added = add;
    Decomposition next = subtract(state, sub);
    next.add_all(add);
    rec.state_after = next;
    return {std::move(next), std::move(rec)};
}

/// Wedge decomposition of the polyhedral product over the full k-skeleton
/// on the given labels: each j-subset appears with suspension k+1 and
/// multiplicity C(j-1, k+1).
inline Decomposition closed_form_skeleton(std::vector<int> labels, int k) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    int n = static_cast<int>(labels.size());
    if (k < 0 || k > n - 2)
        fail(errc::k_out_of_range,
             "k=" + std::to_string(k) + " outside [0," + std::to_string(n - 2) + "]");

    Decomposition out;
    for (int j = k + 2; j <= n; ++j) {
        Mult mult = binomial(j - 1, k + 1);
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> verts;
            verts.reserve(idx.size());
            for (int i : idx) verts.push_back(labels[static_cast<std::size_t>(i)]);
            out.add(Summand(k + 1, Face(std::move(verts))), mult);
            int t = j - 1;
            while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - 1 - (j - 1 - t)) --t;
            if (t < 0) break;
            ++idx[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < j; ++u)
                idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    return out;
}

/// Wedge decomposition for n disjoint points: each index subset of size
/// k >= 2 contributes a single suspension with multiplicity k-1.
inline Decomposition closed_form_disjoint_points(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty()) fail(errc::empty_index_set, "no points");
    std::size_t n = labels.size();

    Decomposition out;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
        int k = std::popcount(subset);
        if (k < 2) continue;
        std::vector<int> verts;
        for (std::size_t i = 0; i < n; ++i)
            if (subset & (std::uint64_t{1} << i)) verts.push_back(labels[i]);
        out.add(Summand(1, Face(std::move(verts))), k - 1);
    }
    return out;
}

/**
 * Combine decompositions of two complexes glued along the common face tau:
 * the join of the two off-face products, plus each side half-smashed with
 * the other side's off-face product.
 */
inline Decomposition decompose_glued(const Decomposition& d1, const Decomposition& d2,
                                     const std::vector<int>& v1, const std::vector<int>& v2,
                                     const Face& tau) {
    std::vector<int> sorted1 = v1, sorted2 = v2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    std::vector<int> shared;
    std::set_intersection(sorted1.begin(), sorted1.end(), sorted2.begin(), sorted2.end(),
                          std::back_inserter(shared));
    if (shared != tau.vertices())
        fail(errc::overlap_not_tau,
             "label sets share " + Face(shared).to_string() + " but tau is " + tau.to_string());
    for (const auto* d : {&d1, &d2})
        for (const auto& [s, m] : d->terms())
            if (s.suspension() < 1)
                fail(errc::not_a_suspension, "summand " + s.to_string() + " is not suspended");

    std::vector<int> left, right;
    for (int v : sorted1)
        if (!tau.contains(v)) left.push_back(v);
    for (int v : sorted2)
        if (!tau.contains(v)) right.push_back(v);

    Decomposition out;
    if (!left.empty() && !right.empty()) out.add_all(product_join_expand(left, right));
    for (const auto& [s, m] : d1.terms()) out.add_all(half_smash_expand(s, right), m);
    for (const auto& [s, m] : d2.terms()) out.add_all(half_smash_expand(s, left), m);
    return out;
}

struct DecomposeOptions {
    /// Test hook: permutes the filtration steps before they are adjoined.
    std::function<void(std::vector<Face>&)> reorder_steps;
    bool build_trace = true;
};

struct DecomposeOutcome {
    Decomposition decomposition;
    DecompositionTrace trace;
};

namespace detail {

inline Decomposition decompose_impl(const SimplicialComplex& k, DecompositionTrace& trace,
                                    const DecomposeOptions& opts);

inline Decomposition decompose_core(const SimplicialComplex& k, DecompositionTrace& trace,
                                    const DecomposeOptions& opts, std::size_t id) {
    int v_min = k.vertex_labels().front();
    Decomposition state = decompose_impl(link(k, Face{v_min}), trace, opts);

    if (opts.build_trace) {
        TraceRecord rec;
        rec.complex_id = id;
        rec.action = TraceAction::cone_reduction;
        rec.face = Face{v_min};
        rec.state_before = state;
        rec.state_after = state;
        trace.records.push_back(std::move(rec));
    }

    std::vector<Face> steps = filtration(k).steps;
    if (opts.reorder_steps) opts.reorder_steps(steps);
    for (const Face& tau : steps) {
        auto [next, rec] = adjoin_step(state, v_min, tau, k.vertex_labels());
        state = std::move(next);
        if (opts.build_trace) {
            rec.complex_id = id;
            trace.records.push_back(std::move(rec));
        }
    }
    return state;
}

inline Decomposition decompose_impl(const SimplicialComplex& k, DecompositionTrace& trace,
                                    const DecomposeOptions& opts) {
    std::size_t id = opts.build_trace ? trace.add_snapshot(k) : 0;

    auto record_simple = [&](TraceAction action, std::optional<Face> face,
                             const Decomposition& result) {
        if (!opts.build_trace) return;
        TraceRecord rec;
        rec.complex_id = id;
        rec.action = action;
        rec.face = std::move(face);
        rec.state_after = result;
        rec.added = result;
        trace.records.push_back(std::move(rec));
    };

    if (k.is_full_simplex() || k.vertex_count() <= 1) {
        Decomposition empty;
        record_simple(TraceAction::base_case, std::nullopt, empty);
        return empty;
    }

    std::vector<int> isolated = isolated_vertices(k);
    if (!isolated.empty()) {
        if (isolated.size() == k.vertex_count()) {
            Decomposition d = closed_form_disjoint_points(k.vertex_labels());
            record_simple(TraceAction::base_case, Face(isolated), d);
            return d;
        }
        std::vector<int> core_labels;
        for (int v : k.vertex_labels())
            if (!std::binary_search(isolated.begin(), isolated.end(), v))
                core_labels.push_back(v);

        Decomposition core = decompose_impl(restriction(k, core_labels), trace, opts);
        Decomposition points = closed_form_disjoint_points(isolated);
        Decomposition combined = decompose_glued(core, points, core_labels, isolated, Face{});

        if (opts.build_trace) {
            TraceRecord rec;
            rec.complex_id = id;
            rec.action = TraceAction::split_isolated;
            rec.face = Face(isolated);
            rec.state_before = core;
            rec.added = subtract(combined, core);
            rec.state_after = combined;
            trace.records.push_back(std::move(rec));
        }
        return combined;
    }

    return decompose_core(k, trace, opts, id);
}

} // namespace detail

/**
 * Wedge decomposition of the polyhedral product of cone pairs over a
 * complex that is shifted under the natural order of its labels.
 *
 * The recursion follows the inductive proof: reduce to the link of the
 * minimal vertex, then adjoin the filtration faces one at a time; isolated
 * vertices split off as a disjoint union first.
 */
inline DecomposeOutcome decompose(const SimplicialComplex& k, DecomposeOptions opts = {}) {
    for (int v : k.vertex_labels())
        if (!k.has_vertex_face(v))
            fail(errc::missing_singleton, "vertex " + std::to_string(v) + " is not a face");
    auto verdict = is_shifted(k, VertexOrder::natural(k.vertex_labels()));
    if (!verdict.shifted) {
        const auto& w = *verdict.witness;
        fail(errc::not_shifted, "witness sigma=" + w.sigma.to_string() + " nu=" +
                                    std::to_string(w.nu) + " nu'=" + std::to_string(w.nu_prime));
    }

    DecomposeOutcome out;
    out.decomposition = detail::decompose_impl(k, out.trace, opts);
    return out;
}

/// Decomposition for the simplicial wedge K(J), by substituting the joined
/// copies of each vertex into the decomposition of K.
struct WedgeDecomposition {
    Decomposition decomposition;
    SimplicialComplex wedge_complex;
    WedgeRelabeling relabeling;
};

inline WedgeDecomposition decompose_wedge_construction(const SimplicialComplex& k,
                                                       const std::map<int, int>& multiplicities) {
    WedgeResult wedge = simplicial_wedge(k, multiplicities);
    Decomposition base = decompose(k).decomposition;
    Decomposition substituted = substitute_join(base, wedge.relabeling.replacements);
    return WedgeDecomposition{std::move(substituted), std::move(wedge.complex),
                              std::move(wedge.relabeling)};
}

} // namespace wedgecalc
