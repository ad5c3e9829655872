#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wedgecalc/errors.hpp"
#include "wedgecalc/face.hpp"

namespace wedgecalc {

/// Multiplicities grow like binomials in the vertex count, so they are
/// kept in arbitrary precision.
using Mult = boost::multiprecision::cpp_int;

/**
 * A formal suspended smash product: suspension degree j and the strictly
 * increasing index set {i1,...,ik} of the smashed factors. Two summands
 * are identified exactly when both fields agree.
 */
class Summand {
public:
    Summand(int suspension, Face indices) : suspension_(suspension), indices_(std::move(indices)) {
        if (indices_.empty()) fail(errc::empty_index_set, "summand needs a nonempty index set");
        if (suspension_ < 0)
            fail(errc::not_a_suspension, "negative suspension " + std::to_string(suspension_));
    }

    int suspension() const noexcept { return suspension_; }
    const Face& indices() const noexcept { return indices_; }

    friend bool operator==(const Summand& a, const Summand& b) {
        return a.suspension_ == b.suspension_ && a.indices_ == b.indices_;
    }

    /// Canonical order: index-set cardinality, lexicographic indices, suspension.
    friend bool operator<(const Summand& a, const Summand& b) {
        if (!(a.indices_ == b.indices_)) return a.indices_ < b.indices_;
        return a.suspension_ < b.suspension_;
    }

    std::string to_string() const {
        std::ostringstream out;
        if (suspension_ == 1)
            out << "Σ ";
        else if (suspension_ > 1)
            out << "Σ^" << suspension_ << ' ';
        const auto& verts = indices_.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) out << "∧";
            out << 'X' << verts[i];
        }
        return out.str();
    }

private:
    int suspension_;
    Face indices_;
};

/**
 * A finite multiset of summands standing for a wedge sum; the empty
 * multiset stands for a contractible space. Terms are kept in canonical
 * order with positive multiplicities.
 */
class Decomposition {
public:
    Decomposition() = default;

    static Decomposition of(std::initializer_list<Summand> terms) {
        Decomposition d;
        for (const Summand& s : terms) d.add(s, 1);
        return d;
    }

    void add(const Summand& s, Mult count = 1) {
        if (count == 0) return;
        if (count < 0) throw std::logic_error("negative multiplicity");
        terms_[s] += count;
    }

    void add_all(const Decomposition& other, const Mult& scale = 1) {
        for (const auto& [s, m] : other.terms_) add(s, m * scale);
    }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t distinct_terms() const noexcept { return terms_.size(); }

    Mult total_multiplicity() const {
        Mult total = 0;
        for (const auto& [s, m] : terms_) total += m;
        return total;
    }

    Mult multiplicity(const Summand& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Mult(0) : it->second;
    }

    const std::map<Summand, Mult>& terms() const noexcept { return terms_; }

    bool is_sub_multiset_of(const Decomposition& other) const {
        for (const auto& [s, m] : terms_)
            if (other.multiplicity(s) < m) return false;
        return true;
    }

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

private:
    std::map<Summand, Mult> terms_;
};

/// The iterated join of the listed factors: k spaces join to a (k-1)-fold
/// suspension of their smash product.
inline Summand join_closed_form(const Face& indices) {
    if (indices.empty()) fail(errc::empty_index_set, "join of no factors");
    return Summand(static_cast<int>(indices.cardinality()) - 1, indices);
}

/// Join of two summands on disjoint index sets: suspensions add plus one.
inline Summand join_summands(const Summand& a, const Summand& b) {
    std::vector<int> merged = a.indices().vertices();
    for (int v : b.indices().vertices()) {
        if (a.indices().contains(v))
            fail(errc::index_sets_overlap, "index " + std::to_string(v) + " on both sides");
        merged.push_back(v);
    }
    return Summand(a.suspension() + b.suspension() + 1, Face(std::move(merged)));
}

/// Half-smash of a suspension with a product of factors indexed by extras:
/// one summand per subset of extras, all at the original suspension.
inline Decomposition half_smash_expand(const Summand& s, const std::vector<int>& extras) {
    if (s.suspension() < 1)
        fail(errc::not_a_suspension, "half-smash needs a suspension, got " + s.to_string());
    for (int v : extras)
        if (s.indices().contains(v))
            fail(errc::overlapping_indices, "extra index " + std::to_string(v) + " already smashed");

    std::vector<int> sorted_extras = extras;
    std::sort(sorted_extras.begin(), sorted_extras.end());
    sorted_extras.erase(std::unique(sorted_extras.begin(), sorted_extras.end()),
                        sorted_extras.end());

    Decomposition out;
    std::size_t n = sorted_extras.size();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::vector<int> verts = s.indices().vertices();
        for (std::size_t i = 0; i < n; ++i)
            if (subset & (std::uint64_t{1} << i)) verts.push_back(sorted_extras[i]);
        out.add(Summand(s.suspension(), Face(std::move(verts))));
    }
    return out;
}

/// Join of two products of factors, expanded into single-suspension smashes:
/// one summand per pair of nonempty subsets.
inline Decomposition product_join_expand(const std::vector<int>& left,
                                         const std::vector<int>& right) {
    if (left.empty() || right.empty()) fail(errc::empty_factor, "product join needs both factors");
    std::set<int> seen(left.begin(), left.end());
    for (int v : right)
        if (seen.count(v))
            fail(errc::overlapping_indices, "index " + std::to_string(v) + " on both sides");

    Decomposition out;
    std::size_t nl = left.size(), nr = right.size();
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << nl); ++a) {
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << nr); ++b) {
            std::vector<int> verts;
            for (std::size_t i = 0; i < nl; ++i)
                if (a & (std::uint64_t{1} << i)) verts.push_back(left[i]);
            for (std::size_t i = 0; i < nr; ++i)
                if (b & (std::uint64_t{1} << i)) verts.push_back(right[i]);
            out.add(Summand(1, Face(std::move(verts))));
        }
    }
    return out;
}

/// Half-smash of a product of factors with a whole decomposition; expands
/// the same way on each summand regardless of the side.
inline Decomposition left_half_smash_expand(const std::vector<int>& factors,
                                            const Decomposition& d) {
    Decomposition out;
    for (const auto& [s, m] : d.terms()) out.add_all(half_smash_expand(s, factors), m);
    return out;
}

/// Multiset difference; the subtrahend must be contained in the minuend.
inline Decomposition subtract(const Decomposition& d1, const Decomposition& d2) {
    Decomposition out;
    for (const auto& [s, m] : d2.terms())
        if (d1.multiplicity(s) < m)
            fail(errc::not_a_sub_multiset,
                 "missing " + s.to_string() + " (have " + d1.multiplicity(s).str() + ", need " +
                     m.str() + ")");
    for (const auto& [s, m] : d1.terms()) {
        Mult rest = m - d2.multiplicity(s);
        if (rest > 0) out.add(s, rest);
    }
    return out;
}

/// Replace each factor X_i by the join of its listed copies: the index i
/// becomes the copy labels and the suspension grows by copies-1.
inline Decomposition substitute_join(const Decomposition& d,
                                     const std::map<int, std::vector<int>>& replacement) {
    std::set<int> used;
    for (const auto& [old_label, copies] : replacement) {
        if (copies.empty())
            fail(errc::missing_substitution,
                 "empty replacement list for X" + std::to_string(old_label));
        for (int c : copies)
            if (!used.insert(c).second)
                fail(errc::overlapping_replacement_labels,
                     "replacement label " + std::to_string(c) + " used twice");
    }

    Decomposition out;
    for (const auto& [s, m] : d.terms()) {
        int extra_suspension = 0;
        std::vector<int> verts;
        for (int i : s.indices().vertices()) {
            auto it = replacement.find(i);
            if (it == replacement.end())
                fail(errc::missing_substitution, "no replacement for X" + std::to_string(i));
            extra_suspension += static_cast<int>(it->second.size()) - 1;
            verts.insert(verts.end(), it->second.begin(), it->second.end());
        }
        out.add(Summand(s.suspension() + extra_suspension, Face(std::move(verts))), m);
    }
    return out;
}

/// Text form: terms in canonical order, contractible rendered as "*".
inline std::string render_text(const Decomposition& d) {
    if (d.empty()) return "∗";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, m] : d.terms()) {
        if (!first) out << " ∨ ";
        first = false;
        if (m != 1) out << m.str() << "·";
        out << s.to_string();
    }
    return out.str();
}

} // namespace wedgecalc
