#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wedgecalc {

/// Closed enumeration of domain errors. Every throwing operation in the
/// library reports one of these codes; the CLI maps them 1:1 to exit
/// codes and machine-readable error objects.
enum class errc {
    duplicate_vertex_in_face,
    vertex_out_of_range,
    too_many_vertices,
    face_not_in_complex,
    vertex_sets_overlap,
    k_out_of_range,
    missing_multiplicity,
    nonpositive_multiplicity,
    overlap_not_exactly_tau,
    not_shifted,
    boundary_not_in_link,
    empty_index_set,
    index_sets_overlap,
    not_a_suspension,
    overlapping_indices,
    empty_factor,
    not_a_sub_multiset,
    missing_substitution,
    overlapping_replacement_labels,
    missing_singleton,
    overlap_not_tau,
    void_complex,
    missing_dimension,
    parse_error,
    unknown_subcommand,
};

constexpr std::string_view errc_name(errc code) {
    switch (code) {
        case errc::duplicate_vertex_in_face: return "DuplicateVertexInFace";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::too_many_vertices: return "TooManyVertices";
        case errc::face_not_in_complex: return "FaceNotInComplex";
        case errc::vertex_sets_overlap: return "VertexSetsOverlap";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::missing_multiplicity: return "MissingMultiplicity";
        case errc::nonpositive_multiplicity: return "NonpositiveMultiplicity";
        case errc::overlap_not_exactly_tau: return "OverlapNotExactlyTau";
        case errc::not_shifted: return "NotShifted";
        case errc::boundary_not_in_link: return "BoundaryNotInLink";
        case errc::empty_index_set: return "EmptyIndexSet";
        case errc::index_sets_overlap: return "IndexSetsOverlap";
        case errc::not_a_suspension: return "NotASuspension";
        case errc::overlapping_indices: return "OverlappingIndices";
        case errc::empty_factor: return "EmptyFactor";
        case errc::not_a_sub_multiset: return "NotASubMultiset";
        case errc::missing_substitution: return "MissingSubstitution";
        case errc::overlapping_replacement_labels: return "OverlappingReplacementLabels";
        case errc::missing_singleton: return "MissingSingleton";
        case errc::overlap_not_tau: return "OverlapNotTau";
        case errc::void_complex: return "VoidComplex";
        case errc::missing_dimension: return "MissingDimension";
        case errc::parse_error: return "ParseError";
        case errc::unknown_subcommand: return "UnknownSubcommand";
    }
    return "UnknownError";
}

/// Exception carrying a domain error code plus a human-readable payload.
class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code),
          detail_(detail) {}

    errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw domain_error(code, detail);
}

} // namespace wedgecalc
