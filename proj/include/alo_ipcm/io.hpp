#pragma once

/*
 * JSON matrix files.
 *
 *   PCM:  {"scale": "multiplicative", "entries": [[1, 2], [0.5, 1]]}
 *   IPCM: {"scale": "additive", "n": 2, "entries": [[[0,0],[4,7]], [[-7,-4],[0,0]]]}
 *
 * On input any diagonal entry and any entry below the diagonal may be
 * null; they default to the identity and to the reciprocal of the mirrored
 * entry. Entries that are present are kept as given and validated.
 */

#include <alo_ipcm/alo_group.hpp>
#include <alo_ipcm/ipcm.hpp>
#include <alo_ipcm/pcm.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

namespace alo {

using MatrixContent = std::variant<Pcm, Ipcm>;

inline const Scale& scale_of(const MatrixContent& m)
{
    return std::visit([](const auto& x) -> const Scale& { return x.scale(); }, m);
}

/// Point matrices are handled as degenerate IPCMs by the interval machinery.
inline Ipcm as_ipcm(const MatrixContent& m)
{
    if (const auto* p = std::get_if<Pcm>(&m)) return Ipcm::from_pcm(*p);
    return std::get<Ipcm>(m);
}

namespace detail {

using nlohmann::json;

inline double number(const json& v, const char* what)
{
    if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
    return v.get<double>();
}

inline Scale resolve_scale(const json& doc, const std::optional<Scale>& override_scale)
{
    if (override_scale) return *override_scale;
    if (!doc.contains("scale")) throw ParseError("missing \"scale\"");
    if (!doc["scale"].is_string()) throw ParseError("\"scale\" must be a string");
    const auto id = parse_scale_id(doc["scale"].get<std::string>());
    if (!id) throw ParseError("unknown scale \"" + doc["scale"].get<std::string>() + "\"");
    return Scale::from_id(*id);
}

inline bool entries_are_intervals(const json& rows)
{
    for (const auto& row : rows) {
        for (const auto& v : row) {
            if (v.is_null()) continue;
            if (v.is_array()) return true;
            if (v.is_number()) return false;
            throw ParseError("matrix entries must be numbers, [lo, hi] pairs or null");
        }
    }
    throw ParseError("matrix has no specified entries");
}

inline void require_fillable(std::size_t i, std::size_t j, const json& mirror)
{
    if (i < j) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                         + ") above the diagonal may not be omitted");
    }
    if (mirror.is_null()) {
        throw ParseError("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and ("
                         + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") are both missing");
    }
}

} // namespace detail

/// Parses a matrix document. With `override_scale` the values are
/// re-tagged to that scale and re-validated against its domain.
inline MatrixContent parse_matrix(const nlohmann::json& doc, const std::optional<Scale>& override_scale = std::nullopt,
                                  Tolerance tol = default_tolerance)
{
    using detail::json;
    if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
    const Scale g = detail::resolve_scale(doc, override_scale);
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("missing \"entries\" array");
    const json& rows = doc["entries"];
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ParseError("\"entries\" must be a square array of rows");
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n) {
            throw ParseError("\"n\" does not match the number of rows");
        }
    }
    if (n < 2) throw ParseError("matrix order must be at least 2");

    const double e = g.raw_identity();
    if (!detail::entries_are_intervals(rows)) {
        std::vector<double> v(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const json& x = rows[i][j];
                if (!x.is_null()) {
                    v[i * n + j] = detail::number(x, "PCM entry");
                } else if (i == j) {
                    v[i * n + j] = e;
                } else {
                    detail::require_fillable(i, j, rows[j][i]);
                    v[i * n + j] = g.raw_inv(g.element(detail::number(rows[j][i], "PCM entry")).value());
                }
            }
        }
        return Pcm(g, n, std::move(v), tol);
    }

    auto read_pair = [](const json& x) {
        if (!x.is_array() || x.size() != 2) throw ParseError("IPCM entries must be [lo, hi] pairs");
        return Bounds{detail::number(x[0], "interval endpoint"), detail::number(x[1], "interval endpoint")};
    };
    std::vector<Bounds> v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const json& x = rows[i][j];
            if (!x.is_null()) {
                v[i * n + j] = read_pair(x);
            } else if (i == j) {
                v[i * n + j] = {e, e};
            } else {
                detail::require_fillable(i, j, rows[j][i]);
                const Bounds m = read_pair(rows[j][i]);
                v[i * n + j] = {g.raw_inv(g.element(m.hi).value()), g.raw_inv(g.element(m.lo).value())};
            }
        }
    }
    return Ipcm(g, n, std::move(v), tol);
}

inline MatrixContent parse_matrix_text(std::string_view text, const std::optional<Scale>& override_scale = std::nullopt,
                                       Tolerance tol = default_tolerance)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    return parse_matrix(doc, override_scale, tol);
}

inline MatrixContent load_matrix_file(const std::filesystem::path& path,
                                      const std::optional<Scale>& override_scale = std::nullopt,
                                      Tolerance tol = default_tolerance)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_text(ss.str(), override_scale, tol);
}

namespace detail {

inline std::string serializable_name(const Scale& g)
{
    if (g.id() == ScaleId::custom) throw InvalidArgument("custom scales are not serializable");
    return std::string(to_string(g.id()));
}

} // namespace detail

inline nlohmann::json to_json(const Pcm& a)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.order(); ++j) row.push_back(a.raw(i, j));
        rows.push_back(std::move(row));
    }
    return {{"scale", detail::serializable_name(a.scale())}, {"entries", std::move(rows)}};
}

inline nlohmann::json to_json(const Ipcm& a)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.order(); ++j) row.push_back({a.lo(i, j), a.hi(i, j)});
        rows.push_back(std::move(row));
    }
    return {{"scale", detail::serializable_name(a.scale())}, {"n", a.order()}, {"entries", std::move(rows)}};
}

inline nlohmann::json to_json(const MatrixContent& m)
{
    return std::visit([](const auto& x) { return to_json(x); }, m);
}

} // namespace alo
