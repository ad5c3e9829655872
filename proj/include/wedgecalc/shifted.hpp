#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/simplicial_complex.hpp"

namespace wedgecalc {

/**
 * A candidate shifted order: the complex's vertex labels listed from
 * smallest rank to largest.
 */
class VertexOrder {
public:
    explicit VertexOrder(std::vector<int> labels_by_rank)
        : by_rank_(std::move(labels_by_rank)) {
        for (std::size_t i = 0; i < by_rank_.size(); ++i) {
            if (rank_.count(by_rank_[i]))
                fail(errc::duplicate_vertex_in_face,
                     "order repeats vertex " + std::to_string(by_rank_[i]));
            rank_[by_rank_[i]] = i;
        }
    }

    static VertexOrder natural(const std::vector<int>& sorted_labels) {
        return VertexOrder(sorted_labels);
    }

    const std::vector<int>& labels_by_rank() const noexcept { return by_rank_; }

    std::size_t rank(int label) const {
        auto it = rank_.find(label);
        if (it == rank_.end())
            fail(errc::vertex_out_of_range, "vertex " + std::to_string(label) + " not in order");
        return it->second;
    }

    bool covers(const std::vector<int>& labels) const {
        if (labels.size() != by_rank_.size()) return false;
        for (int v : labels)
            if (!rank_.count(v)) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < by_rank_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(by_rank_[i]);
        }
        return out;
    }

private:
    std::vector<int> by_rank_;
    std::map<int, std::size_t> rank_;
};

/// Witness for a failed shifted check: sigma is a face, moving nu to the
/// smaller vertex nu_prime leaves the complex.
struct ShiftWitness {
    Face sigma;
    int nu;
    int nu_prime;
};

struct ShiftVerdict {
    bool shifted;
    std::optional<ShiftWitness> witness;
};

/**
 * A complex is shifted under an order when replacing any vertex of any
 * face by a smaller vertex again gives a face. Checking the maximal faces
 * suffices: a replacement inside a smaller face is a subset of the same
 * replacement inside an enclosing maximal face.
 */
inline ShiftVerdict is_shifted(const SimplicialComplex& k, const VertexOrder& order) {
    if (!order.covers(k.vertex_labels()))
        fail(errc::vertex_out_of_range, "order does not cover the vertex set");
    for (const Face& sigma : k.maximal_faces()) {
        for (int nu : sigma.vertices()) {
            std::size_t nu_rank = order.rank(nu);
            for (int nu_prime : k.vertex_labels()) {
                if (order.rank(nu_prime) >= nu_rank) continue;
                if (sigma.contains(nu_prime)) continue; // replacement is a subset, already a face
                std::vector<int> moved;
                for (int w : sigma.vertices())
                    if (w != nu) moved.push_back(w);
                moved.push_back(nu_prime);
                Face candidate{std::move(moved)};
                if (!k.contains(candidate))
                    return ShiftVerdict{false, ShiftWitness{sigma, nu, nu_prime}};
            }
        }
    }
    return ShiftVerdict{true, std::nullopt};
}

inline bool is_shifted_natural(const SimplicialComplex& k) {
    return is_shifted(k, VertexOrder::natural(k.vertex_labels())).shifted;
}

inline std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > cap / i) return cap + 1;
        f *= i;
    }
    return f;
}

/// Default permutation budget: 9! orders.
inline constexpr std::uint64_t kDefaultPermLimit = 362880;

/**
 * Exhaustive search for a shifted order, returning the lexicographically
 * least label sequence that works, or nothing. Candidates for the minimal
 * vertex are pruned to those that can absorb every single-vertex move,
 * which never discards a valid order.
 */
inline std::optional<VertexOrder> find_shifted_order(const SimplicialComplex& k,
                                                     std::uint64_t perm_limit = kDefaultPermLimit) {
    const std::vector<int>& labels = k.vertex_labels();
    std::size_t n = labels.size();
    if (factorial_capped(n, perm_limit) > perm_limit)
        fail(errc::too_many_vertices,
             std::to_string(n) + "! exceeds the permutation budget of " +
                 std::to_string(perm_limit));
    if (n == 0) return VertexOrder({});

    // A vertex can be rank 0 only if replacing any vertex of any maximal
    // face by it stays in the complex.
    auto can_be_minimal = [&](int v) {
        for (const Face& sigma : k.maximal_faces()) {
            if (sigma.contains(v)) continue;
            for (int nu : sigma.vertices()) {
                std::vector<int> moved;
                for (int w : sigma.vertices())
                    if (w != nu) moved.push_back(w);
                moved.push_back(v);
                if (!k.contains(Face{std::move(moved)})) return false;
            }
        }
        return true;
    };

    std::vector<int> perm = labels; // sorted, so permutations start lexicographically least
    do {
        if (!can_be_minimal(perm[0])) continue;
        VertexOrder order(perm);
        if (is_shifted(k, order).shifted) return order;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/**
 * The filtration driving the main decomposition: starting from the link of
 * the minimal vertex, the deletion of that vertex is rebuilt by adjoining
 * its remaining maximal faces one at a time. Every facet of each adjoined
 * face already lies in the link.
 */
struct Filtration {
    SimplicialComplex base;  // link of the minimal vertex
    std::vector<Face> steps; // adjoined faces, lexicographic
};

inline Filtration filtration(const SimplicialComplex& k) {
    auto verdict = is_shifted(k, VertexOrder::natural(k.vertex_labels()));
    if (!verdict.shifted) {
        const auto& w = *verdict.witness;
        fail(errc::not_shifted, "witness sigma=" + w.sigma.to_string() + " nu=" +
                                    std::to_string(w.nu) + " nu'=" + std::to_string(w.nu_prime));
    }
    if (k.vertex_count() == 0)
        fail(errc::void_complex, "filtration needs at least one vertex");

    int v_min = k.vertex_labels().front();
    std::vector<int> rest_labels(k.vertex_labels().begin() + 1, k.vertex_labels().end());

    Filtration out{link(k, Face{v_min}), {}};
    SimplicialComplex rest = restriction(k, rest_labels);

    for (const Face& tau : rest.maximal_faces()) {
        if (out.base.contains(tau)) continue;
        // Consistency: every facet of tau must already lie in the link.
        for (int skip : tau.vertices()) {
            std::vector<int> facet;
            for (int w : tau.vertices())
                if (w != skip) facet.push_back(w);
            if (!out.base.contains(Face{std::move(facet)}))
                fail(errc::boundary_not_in_link,
                     "facet of " + tau.to_string() + " missing from the link of " +
                         std::to_string(v_min));
        }
        out.steps.push_back(tau);
    }
    std::sort(out.steps.begin(), out.steps.end());
    return out;
}

} // namespace wedgecalc
