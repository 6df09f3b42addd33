// io.hpp
// State file format: UTF-8 JSON {"n": <int>, "amplitudes": [[re, im], ...]}
// with exactly 2^n pairs in flat-index order. Readers preserve amplitudes
// bit-exactly; writers emit 17 significant digits.

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invariants.hpp"
#include "state.hpp"

namespace orbitforge {

inline QubitState parse_state_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes"))
        throw ParseError("state document must be an object with 'n' and 'amplitudes'");
    if (!doc["n"].is_number_integer())
        throw ParseError("'n' must be an integer");
    const int n = doc["n"].get<int>();
    check_qubit_count(n);
    const auto& amps = doc["amplitudes"];
    if (!amps.is_array())
        throw ParseError("'amplitudes' must be an array");
    const std::size_t want = std::size_t(1) << n;
    if (amps.size() != want)
        throw DimensionError("declared n=" + std::to_string(n) + " needs " +
                             std::to_string(want) + " amplitudes, found " +
                             std::to_string(amps.size()));
    QubitState psi = QubitState::zeros(n);
    for (std::size_t i = 0; i < want; ++i) {
        const auto& pair = amps[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            throw ParseError("amplitude " + std::to_string(i) +
                             " must be a [re, im] number pair");
        psi.amplitudes[i] = cd{pair[0].get<double>(), pair[1].get<double>()};
    }
    return psi;
}

inline QubitState parse_state(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_state_json(doc);
}

inline QubitState read_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string write_state(const QubitState& psi) {
    std::string out = "{\"n\": " + std::to_string(psi.n) + ", \"amplitudes\": [";
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (i) out += ", ";
        out += "[" + format_g17(psi.amplitudes[i].real()) + ", " +
               format_g17(psi.amplitudes[i].imag()) + "]";
    }
    out += "]}";
    return out;
}

inline void write_state_file(const QubitState& psi, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << write_state(psi) << "\n";
}

// Pattern spec: {"n": <int>, "degree": <int>, "perms": [[...], ...]} with
// 1-based permutation images, one permutation per slot.
inline ContractionPattern parse_pattern_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("degree") ||
        !doc.contains("perms"))
        throw ParseError("pattern document needs 'n', 'degree' and 'perms'");
    if (!doc["n"].is_number_integer() || !doc["degree"].is_number_integer() ||
        !doc["perms"].is_array())
        throw ParseError("pattern fields have the wrong types");
    ContractionPattern pat;
    pat.n = doc["n"].get<int>();
    pat.degree = doc["degree"].get<int>();
    pat.label = doc.value("label", std::string("custom"));
    for (const auto& perm : doc["perms"]) {
        if (!perm.is_array()) throw ParseError("each slot permutation must be an array");
        std::vector<int> p;
        for (const auto& v : perm) {
            if (!v.is_number_integer()) throw ParseError("permutation images must be integers");
            p.push_back(v.get<int>() - 1);  // 1-based on the wire
        }
        pat.perms.push_back(std::move(p));
    }
    pat.validate();
    return pat;
}

inline ContractionPattern parse_pattern(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_pattern_json(doc);
}

inline ContractionPattern read_pattern_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str());
}

inline nlohmann::json pattern_to_json(const ContractionPattern& pat) {
    nlohmann::json perms = nlohmann::json::array();
    for (const auto& p : pat.perms) {
        nlohmann::json row = nlohmann::json::array();
        for (int v : p) row.push_back(v + 1);
        perms.push_back(row);
    }
    return nlohmann::json{
        {"n", pat.n}, {"degree", pat.degree}, {"perms", perms}, {"label", pat.label}};
}

}  // namespace orbitforge
