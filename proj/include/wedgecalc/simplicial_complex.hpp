#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/face.hpp"

namespace wedgecalc {

using face_mask = std::uint64_t;

/// Vertex sets are stored as machine-word subsets, so at most 63 labels.
inline constexpr std::size_t kMaxVertices = 63;

/// The full face set is materialized only while it stays below this bound;
/// beyond it, operations run off the maximal faces alone.
inline constexpr std::size_t kFaceMaterializeCap = std::size_t{1} << 20;

/**
 * A finite simplicial complex on an ordered set of positive integer labels.
 *
 * Faces are downward closed and always include the empty face. Values are
 * immutable after construction, so they are safe to share across threads.
 * Internally faces are machine-word subsets keyed by the label-to-position
 * table of the sorted vertex set.
 */
class SimplicialComplex {
public:
    const std::vector<int>& vertex_labels() const noexcept { return labels_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }

    /// Maximal faces in canonical order (cardinality, then lexicographic).
    const std::vector<face_mask>& maximal_masks() const noexcept { return maximal_; }

    std::vector<Face> maximal_faces() const {
        std::vector<Face> out;
        out.reserve(maximal_.size());
        for (face_mask m : maximal_) out.push_back(face_of(m));
        return out;
    }

    bool faces_materialized() const noexcept { return materialized_; }

    /// All faces, including the empty face, in canonical order.
    const std::vector<face_mask>& face_masks() const {
        require_materialized();
        return face_masks_;
    }

    std::vector<Face> faces() const {
        require_materialized();
        std::vector<Face> out;
        out.reserve(face_masks_.size());
        for (face_mask m : face_masks_) out.push_back(face_of(m));
        return out;
    }

    std::size_t face_count() const {
        require_materialized();
        return face_masks_.size();
    }

    bool contains_mask(face_mask m) const {
        for (face_mask top : maximal_)
            if ((m & ~top) == 0) return true;
        return false;
    }

    bool contains(const Face& f) const {
        auto m = try_mask_of(f);
        return m && contains_mask(*m);
    }

    /// Largest face dimension; -1 for the empty complex.
    int dimension() const {
        int d = -1;
        for (face_mask m : maximal_) d = std::max(d, std::popcount(m) - 1);
        return d;
    }

    bool is_empty_complex() const { return maximal_.size() == 1 && maximal_[0] == 0; }

    bool is_full_simplex() const {
        return maximal_.size() == 1 && maximal_[0] == full_mask();
    }

    bool has_vertex_face(int label) const {
        auto pos = position_of(label);
        return pos && contains_mask(face_mask{1} << *pos);
    }

    face_mask full_mask() const noexcept {
        return labels_.empty() ? 0 : (~face_mask{0} >> (64 - labels_.size()));
    }

    int label_at(std::size_t position) const { return labels_[position]; }

    std::optional<std::size_t> position_of(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// Encode a face over this complex's label table; error if any vertex is foreign.
    face_mask mask_of(const Face& f) const {
        auto m = try_mask_of(f);
        if (!m)
            fail(errc::vertex_out_of_range,
                 "face " + f.to_string() + " uses a label outside the vertex set");
        return *m;
    }

    std::optional<face_mask> try_mask_of(const Face& f) const {
        face_mask m = 0;
        for (int v : f.vertices()) {
            auto pos = position_of(v);
            if (!pos) return std::nullopt;
            m |= face_mask{1} << *pos;
        }
        return m;
    }

    Face face_of(face_mask m) const {
        std::vector<int> verts;
        verts.reserve(static_cast<std::size_t>(std::popcount(m)));
        while (m) {
            unsigned pos = static_cast<unsigned>(std::countr_zero(m));
            verts.push_back(labels_[pos]);
            m &= m - 1;
        }
        return Face(std::move(verts));
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.maximal_ == b.maximal_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "complex(V=" << labels_.size() << ", maximal=[";
        bool first = true;
        for (face_mask m : maximal_) {
            if (!first) out << ' ';
            first = false;
            out << face_of(m).to_string();
        }
        out << "])";
        return out.str();
    }

    /// Assemble a complex from generator masks over a sorted label table.
    /// Generators get absorbed into maximal faces; the face set is the
    /// downward closure (materialized while it fits under the cap).
    static SimplicialComplex from_masks(std::vector<int> sorted_labels,
                                        std::vector<face_mask> generators) {
        if (sorted_labels.size() > kMaxVertices)
            fail(errc::too_many_vertices,
                 std::to_string(sorted_labels.size()) + " vertices exceeds the word-size limit of " +
                     std::to_string(kMaxVertices));

        SimplicialComplex k;
        k.labels_ = std::move(sorted_labels);

        // Absorb generators contained in other generators.
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        std::vector<face_mask> maximal;
        for (face_mask g : generators) {
            bool absorbed = false;
            for (face_mask h : generators) {
                if (h != g && (g & ~h) == 0) {
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) maximal.push_back(g);
        }
        if (maximal.empty()) maximal.push_back(0);
        k.sort_canonical(maximal);
        k.maximal_ = std::move(maximal);
        k.materialize();
        return k;
    }

private:
    void require_materialized() const {
        if (!materialized_)
            throw std::logic_error("face set too large to materialize; use maximal faces");
    }

    void materialize() {
        std::unordered_set<face_mask> seen;
        seen.reserve(1024);
        for (face_mask top : maximal_) {
            // Submask enumeration, descending.
            face_mask sub = top;
            while (true) {
                seen.insert(sub);
                if (seen.size() > kFaceMaterializeCap) {
                    materialized_ = false;
                    face_masks_.clear();
                    return;
                }
                if (sub == 0) break;
                sub = (sub - 1) & top;
            }
        }
        face_masks_.assign(seen.begin(), seen.end());
        sort_canonical(face_masks_);
        materialized_ = true;
    }

    // Canonical face order: cardinality first, then lexicographic on the
    // increasing label tuples (equals lexicographic on bit positions).
    void sort_canonical(std::vector<face_mask>& masks) const {
        auto key = [](face_mask m) {
            // Lexicographic comparison of position sequences of equal length
            // equals numeric comparison of the bit-reversed masks.
            std::uint64_t rev = 0;
            for (int i = 0; i < 64; ++i)
                if (m & (face_mask{1} << i)) rev |= face_mask{1} << (63 - i);
            return rev;
        };
        std::sort(masks.begin(), masks.end(), [&](face_mask a, face_mask b) {
            int ca = std::popcount(a), cb = std::popcount(b);
            if (ca != cb) return ca < cb;
            return key(a) > key(b);
        });
    }

    std::vector<int> labels_;
    std::vector<face_mask> maximal_;
    std::vector<face_mask> face_masks_;
    bool materialized_ = false;
};

/// Downward closure of the generators plus the empty face, on the given
/// vertex set. Generators contained in other generators are absorbed.
inline SimplicialComplex build_complex(std::vector<int> vertex_set,
                                       const std::vector<Face>& generating_faces) {
    std::sort(vertex_set.begin(), vertex_set.end());
    vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
    if (!vertex_set.empty() && vertex_set.front() <= 0)
        fail(errc::vertex_out_of_range, "vertex labels must be positive");
    if (vertex_set.size() > kMaxVertices)
        fail(errc::too_many_vertices,
             std::to_string(vertex_set.size()) + " vertices exceeds the word-size limit of " +
                 std::to_string(kMaxVertices));

    SimplicialComplex table = SimplicialComplex::from_masks(vertex_set, {});
    std::vector<face_mask> gens;
    gens.reserve(generating_faces.size());
    for (const Face& f : generating_faces) {
        auto m = table.try_mask_of(f);
        if (!m)
            fail(errc::vertex_out_of_range,
                 "generator " + f.to_string() + " uses a label outside the vertex set");
        gens.push_back(*m);
    }
    return SimplicialComplex::from_masks(std::move(vertex_set), std::move(gens));
}

/// star_K(sigma) = { tau | sigma united with tau is a face }, on K's vertex set.
inline SimplicialComplex star(const SimplicialComplex& k, const Face& sigma) {
    face_mask s = k.mask_of(sigma);
    if (!k.contains_mask(s))
        fail(errc::face_not_in_complex, "star of " + sigma.to_string());
    std::vector<face_mask> gens;
    for (face_mask m : k.maximal_masks())
        if ((s & ~m) == 0) gens.push_back(m);
    return SimplicialComplex::from_masks(k.vertex_labels(), std::move(gens));
}

/// Full subcomplex on the labels in `keep`: all faces of K inside `keep`,
/// on the vertex set `keep`.
inline SimplicialComplex restriction(const SimplicialComplex& k, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    face_mask keep_mask = 0;
    for (int v : keep) {
        auto pos = k.position_of(v);
        if (!pos)
            fail(errc::vertex_out_of_range,
                 "restriction label " + std::to_string(v) + " is not a vertex");
        keep_mask |= face_mask{1} << *pos;
    }
    // Re-encode restricted maximal faces over the smaller label table.
    SimplicialComplex table = SimplicialComplex::from_masks(keep, {});
    std::vector<face_mask> gens;
    for (face_mask m : k.maximal_masks()) gens.push_back(table.mask_of(k.face_of(m & keep_mask)));
    return SimplicialComplex::from_masks(std::move(keep), std::move(gens));
}

/// link_K(sigma) = star intersect restriction to the complementary labels,
/// on the vertex set V minus sigma.
inline SimplicialComplex link(const SimplicialComplex& k, const Face& sigma) {
    face_mask s = k.mask_of(sigma);
    if (!k.contains_mask(s))
        fail(errc::face_not_in_complex, "link of " + sigma.to_string());
    std::vector<int> rest_labels;
    for (int v : k.vertex_labels())
        if (!sigma.contains(v)) rest_labels.push_back(v);
    SimplicialComplex table = SimplicialComplex::from_masks(rest_labels, {});
    std::vector<face_mask> gens;
    for (face_mask m : k.maximal_masks())
        if ((s & ~m) == 0) gens.push_back(table.mask_of(k.face_of(m & ~s)));
    return SimplicialComplex::from_masks(std::move(rest_labels), std::move(gens));
}

/// Join of complexes on disjoint vertex sets: faces are all unions of a
/// face of each factor. |faces(K1 * K2)| = |faces(K1)| * |faces(K2)|.
inline SimplicialComplex join_complexes(const SimplicialComplex& k1,
                                        const SimplicialComplex& k2) {
    for (int v : k2.vertex_labels())
        if (k1.position_of(v))
            fail(errc::vertex_sets_overlap, "shared vertex " + std::to_string(v));
    std::vector<int> labels = k1.vertex_labels();
    labels.insert(labels.end(), k2.vertex_labels().begin(), k2.vertex_labels().end());
    std::sort(labels.begin(), labels.end());
    SimplicialComplex table = SimplicialComplex::from_masks(labels, {});

    std::vector<face_mask> gens;
    for (face_mask m1 : k1.maximal_masks()) {
        Face f1 = k1.face_of(m1);
        for (face_mask m2 : k2.maximal_masks()) {
            Face f2 = k2.face_of(m2);
            std::vector<int> verts = f1.vertices();
            const auto& w = f2.vertices();
            verts.insert(verts.end(), w.begin(), w.end());
            gens.push_back(table.mask_of(Face(std::move(verts))));
        }
    }
    return SimplicialComplex::from_masks(std::move(labels), std::move(gens));
}

/// cone(K, v) = K joined with the single vertex v.
inline SimplicialComplex cone(const SimplicialComplex& k, int apex) {
    return join_complexes(k, build_complex({apex}, {Face{apex}}));
}

/// Full k-skeleton of the simplex on the given labels; k = -1 gives the
/// empty complex.
inline SimplicialComplex skeleton(std::vector<int> labels, int k) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    int n = static_cast<int>(labels.size());
    if (k < -1 || k > n - 1)
        fail(errc::k_out_of_range,
             "k=" + std::to_string(k) + " outside [-1," + std::to_string(n - 1) + "]");
    std::vector<Face> gens;
    if (k >= 0) {
        // All (k+1)-subsets.
        std::vector<int> idx(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> verts;
            verts.reserve(idx.size());
            for (int i : idx) verts.push_back(labels[static_cast<std::size_t>(i)]);
            gens.push_back(Face(std::move(verts)));
            int j = k;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - 1 - (k - j)) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t <= k; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return build_complex(std::move(labels), gens);
}

/// Boundary of the simplex on the given labels.
inline SimplicialComplex boundary_simplex(std::vector<int> labels) {
    int n = static_cast<int>(labels.size());
    return skeleton(std::move(labels), n - 2);
}

/// Union of two complexes whose face sets overlap in exactly the closure
/// of the common face tau; tau empty gives the disjoint union.
inline SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2,
                              const Face& tau) {
    std::vector<int> shared;
    std::set_intersection(k1.vertex_labels().begin(), k1.vertex_labels().end(),
                          k2.vertex_labels().begin(), k2.vertex_labels().end(),
                          std::back_inserter(shared));
    if (shared != tau.vertices())
        fail(errc::overlap_not_exactly_tau,
             "vertex sets share " + Face(shared).to_string() + " but tau is " + tau.to_string());
    if (!k1.contains(tau) || !k2.contains(tau))
        fail(errc::overlap_not_exactly_tau,
             "tau " + tau.to_string() + " is not a face of both pieces");

    // With the vertex overlap pinned to tau's labels, the face-set overlap
    // can only differ from the closure of tau by missing subsets of tau.
    SimplicialComplex tau_closure = build_complex(tau.vertices(), {tau});
    for (face_mask m : tau_closure.face_masks()) {
        Face f = tau_closure.face_of(m);
        if (!k1.contains(f) || !k2.contains(f))
            fail(errc::overlap_not_exactly_tau,
                 "overlap is missing " + f.to_string() + " from the closure of tau");
    }

    std::vector<int> labels = k1.vertex_labels();
    labels.insert(labels.end(), k2.vertex_labels().begin(), k2.vertex_labels().end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    SimplicialComplex table = SimplicialComplex::from_masks(labels, {});

    std::vector<face_mask> gens;
    for (const Face& f : k1.maximal_faces()) gens.push_back(table.mask_of(f));
    for (const Face& f : k2.maximal_faces()) gens.push_back(table.mask_of(f));
    return SimplicialComplex::from_masks(std::move(labels), std::move(gens));
}

/// Vertices that are faces but lie in no face of cardinality >= 2, i.e.
/// the maximal faces that are singletons.
inline std::vector<int> isolated_vertices(const SimplicialComplex& k) {
    std::vector<int> out;
    for (face_mask m : k.maximal_masks())
        if (std::popcount(m) == 1) out.push_back(k.face_of(m).vertices()[0]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wedgecalc
