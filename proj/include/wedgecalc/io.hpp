#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedgecalc/decomposer.hpp"
#include "wedgecalc/errors.hpp"
#include "wedgecalc/homology.hpp"
#include "wedgecalc/simplicial_complex.hpp"
#include "wedgecalc/specialize.hpp"
#include "wedgecalc/wedge_algebra.hpp"

namespace wedgecalc {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Complexes
//
// JSON schema: {"vertices":[1,2,3,4], "maximal_faces":[[1,2],[1,3]]}
// Text schema: one maximal face per line, space-separated labels.
// ---------------------------------------------------------------------------

inline json complex_to_json(const SimplicialComplex& k) {
    json out;
    out["vertices"] = k.vertex_labels();
    json faces = json::array();
    for (const Face& f : k.maximal_faces())
        if (!f.empty()) faces.push_back(f.vertices());
    out["maximal_faces"] = std::move(faces);
    return out;
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal_faces"))
        fail(errc::parse_error, "complex JSON needs \"vertices\" and \"maximal_faces\"");
    std::vector<int> vertices;
    std::vector<Face> faces;
    try {
        vertices = j.at("vertices").get<std::vector<int>>();
        for (const auto& arr : j.at("maximal_faces")) {
            std::vector<int> verts = arr.get<std::vector<int>>();
            for (std::size_t i = 1; i < verts.size(); ++i)
                if (verts[i] <= verts[i - 1])
                    fail(errc::parse_error, "face labels must be strictly increasing");
            faces.push_back(Face(std::move(verts)));
        }
    } catch (const json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    return build_complex(std::move(vertices), faces);
}

inline SimplicialComplex complex_from_text(const std::string& text) {
    std::vector<Face> faces;
    std::vector<int> vertices;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<int> verts;
        int v;
        while (fields >> v) verts.push_back(v);
        if (!fields.eof())
            fail(errc::parse_error, "non-integer label in line: " + line);
        if (verts.empty()) continue;
        vertices.insert(vertices.end(), verts.begin(), verts.end());
        faces.push_back(Face(std::move(verts)));
    }
    return build_complex(std::move(vertices), faces);
}

/// Auto-detecting parse: JSON if the content leads with '{', text otherwise.
inline SimplicialComplex complex_from_string(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j = json::parse(content, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
        return complex_from_json(j);
    }
    return complex_from_text(content);
}

inline SimplicialComplex complex_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return complex_from_string(buffer.str());
}

// ---------------------------------------------------------------------------
// Decompositions
//
// Term schema: {"suspension":2,"indices":[1,2,3],"multiplicity":2}; a
// decomposition is the canonically sorted array of terms. Multiplicities
// ride as JSON numbers while they fit a 64-bit unsigned and as decimal
// strings beyond that.
// ---------------------------------------------------------------------------

inline json mult_to_json(const Mult& m) {
    if (m <= Mult(std::numeric_limits<std::uint64_t>::max()))
        return json(static_cast<std::uint64_t>(m));
    return json(m.str());
}

inline Mult mult_from_json(const json& j) {
    if (j.is_number_unsigned()) return Mult(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Mult(j.get<std::int64_t>());
    if (j.is_string()) return Mult(j.get<std::string>());
    fail(errc::parse_error, "multiplicity must be a number or decimal string");
}

inline json decomposition_to_json(const Decomposition& d) {
    json out = json::array();
    for (const auto& [s, m] : d.terms()) {
        json term;
        term["suspension"] = s.suspension();
        term["indices"] = s.indices().vertices();
        term["multiplicity"] = mult_to_json(m);
        out.push_back(std::move(term));
    }
    return out;
}

inline Decomposition decomposition_from_json(const json& j) {
    if (!j.is_array()) fail(errc::parse_error, "decomposition JSON must be an array");
    Decomposition out;
    try {
        for (const auto& term : j) {
            int susp = term.at("suspension").get<int>();
            std::vector<int> indices = term.at("indices").get<std::vector<int>>();
            Mult m = mult_from_json(term.at("multiplicity"));
            out.add(Summand(susp, Face(std::move(indices))), m);
        }
    } catch (const json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homology, spheres, traces, errors
// ---------------------------------------------------------------------------

inline json homology_to_json(const HomologyProfile& h) {
    json out;
    json betti = json::object();
    for (std::size_t d = 0; d < h.reduced_betti.size(); ++d)
        betti[std::to_string(d)] = h.reduced_betti[d];
    out["reduced_betti"] = std::move(betti);
    json torsion = json::object();
    for (const auto& [d, factors] : h.torsion) {
        json list = json::array();
        for (const BigInt& f : factors) list.push_back(f.str());
        torsion[std::to_string(d)] = std::move(list);
    }
    out["torsion"] = std::move(torsion);
    return out;
}

inline json spheres_to_json(const SphereMultiset& spheres) {
    json out = json::array();
    for (const auto& [dim, m] : spheres) {
        json s;
        s["dim"] = dim;
        s["mult"] = mult_to_json(m);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string spheres_to_text(const SphereMultiset& spheres) {
    if (spheres.empty()) return "∗";
    std::string out;
    for (const auto& [dim, m] : spheres) {
        if (!out.empty()) out += " ∨ ";
        if (m != 1) out += m.str() + "·";
        out += "S^" + std::to_string(dim);
    }
    return out;
}

inline json trace_record_to_json(const TraceRecord& rec) {
    json out;
    out["complex"] = rec.complex_id;
    out["action"] = std::string(trace_action_name(rec.action));
    if (rec.face) out["face"] = rec.face->vertices();
    out["state_before"] = decomposition_to_json(rec.state_before);
    out["subtracted"] = decomposition_to_json(rec.subtracted);
    out["added"] = decomposition_to_json(rec.added);
    out["state_after"] = decomposition_to_json(rec.state_after);
    return out;
}

inline json trace_to_json(const DecompositionTrace& trace) {
    json out;
    out["complexes"] = trace.snapshots;
    json records = json::array();
    for (const TraceRecord& rec : trace.records) records.push_back(trace_record_to_json(rec));
    out["records"] = std::move(records);
    return out;
}

inline std::string trace_to_text(const DecompositionTrace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.snapshots.size(); ++i)
        out << "complex#" << i << " = " << trace.snapshots[i] << '\n';
    std::size_t step = 0;
    for (const TraceRecord& rec : trace.records) {
        out << "step " << step++ << " [" << trace_action_name(rec.action) << "] complex#"
            << rec.complex_id;
        if (rec.face) out << ' ' << rec.face->to_string();
        out << '\n';
        if (rec.action == TraceAction::adjoin_face) {
            out << "  - " << render_text(rec.subtracted) << '\n';
            out << "  + " << render_text(rec.added) << '\n';
        }
        out << "  state = " << render_text(rec.state_after) << '\n';
    }
    return out.str();
}

inline json error_to_json(const domain_error& e) {
    json out;
    out["error"] = std::string(errc_name(e.code()));
    out["detail"] = e.detail();
    return out;
}

} // namespace wedgecalc
