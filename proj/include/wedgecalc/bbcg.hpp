#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/homology.hpp"
#include "wedgecalc/shifted.hpp"
#include "wedgecalc/simplicial_complex.hpp"
#include "wedgecalc/wedge_algebra.hpp"

namespace wedgecalc {

enum class Validity { exact, suspended_only };

constexpr std::string_view validity_name(Validity v) {
    return v == Validity::exact ? "exact" : "suspended-only";
}

struct BbcgOptions {
    /// Cap on the vertex count before the 2^n subset sweep is refused.
    std::size_t max_vertices = 20;
    /// For complexes too large to re-check shiftedness internally, the
    /// caller's claim decides the validity flag.
    bool caller_asserts_shifted = false;
    /// Collect the per-subset homology profiles for reporting.
    bool collect_subcomplexes = false;
};

struct SubcomplexReport {
    Face missing_subset;
    HomologyProfile profile;
};

struct BbcgResult {
    Decomposition decomposition;
    Validity validity = Validity::suspended_only;
    bool torsion_present = false;
    /// Whether shiftedness was established by an internal search rather
    /// than taken from the caller.
    bool shiftedness_checked = false;
    std::vector<SubcomplexReport> subcomplexes;
};

/// Vertex-count bound under which shiftedness is re-checked internally.
inline constexpr std::size_t kBbcgShiftRecheckLimit = 9;

/**
 * The suspension-level wedge decomposition read off the homology of all
 * full subcomplexes over missing index sets: each missing subset I
 * contributes one summand per homology sphere of K restricted to I. For a
 * shifted complex the equivalence holds without suspending, which is what
 * the `exact` flag reports.
 */
inline BbcgResult bbcg(const SimplicialComplex& k, BbcgOptions options = {}) {
    const std::vector<int>& labels = k.vertex_labels();
    std::size_t n = labels.size();
    if (n > options.max_vertices)
        fail(errc::too_many_vertices,
             std::to_string(n) + " vertices exceeds the subset-enumeration cap of " +
                 std::to_string(options.max_vertices));
    for (int v : labels)
        if (!k.has_vertex_face(v))
            fail(errc::missing_singleton, "vertex " + std::to_string(v) + " is not a face");

    BbcgResult out;

    bool shifted;
    if (n <= kBbcgShiftRecheckLimit) {
        shifted = find_shifted_order(k).has_value();
        out.shiftedness_checked = true;
    } else {
        shifted = options.caller_asserts_shifted;
    }

    // Missing subsets by cardinality, lexicographic within each.
    for (std::size_t card = 1; card <= n; ++card) {
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            face_mask m = 0;
            for (std::size_t i : idx) m |= face_mask{1} << i;
            if (!k.contains_mask(m)) {
                std::vector<int> subset;
                subset.reserve(card);
                for (std::size_t i : idx) subset.push_back(labels[i]);
                Face missing(subset);
                HomologyProfile profile = reduced_homology(restriction(k, subset));
                for (int d = 0; d < static_cast<int>(profile.reduced_betti.size()); ++d)
                    if (profile.betti(d) > 0)
                        out.decomposition.add(Summand(d + 1, missing), Mult(profile.betti(d)));
                if (profile.has_torsion()) {
                    if (shifted && out.shiftedness_checked)
                        throw std::logic_error(
                            "torsion in a full subcomplex of a shifted complex: " +
                            missing.to_string());
                    out.torsion_present = true;
                }
                if (options.collect_subcomplexes)
                    out.subcomplexes.push_back(SubcomplexReport{missing, std::move(profile)});
            }
            // Next combination.
            std::size_t j = card;
            while (j > 0 && idx[j - 1] == n - card + (j - 1)) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t t = j; t < card; ++t) idx[t] = idx[t - 1] + 1;
        }
    }

    out.validity = (shifted && !out.torsion_present) ? Validity::exact : Validity::suspended_only;
    return out;
}

} // namespace wedgecalc
