#include "lacalc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lacalc/errors.hpp"
#include "lacalc/parser.hpp"

namespace lacalc {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

/// Parses JSON, rejecting duplicate object keys.
json parseStrict(const std::string& text) {
    std::vector<std::set<std::string>> seen;
    std::string duplicate;
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start: seen.emplace_back(); break;
            case json::parse_event_t::object_end: seen.pop_back(); break;
            case json::parse_event_t::key:
                if (!seen.back().insert(parsed.get<std::string>()).second && duplicate.empty())
                    duplicate = parsed.get<std::string>();
                break;
            default: break;
        }
        return true;
    };
    json j;
    try {
        j = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!duplicate.empty()) throw SchemaError("$." + duplicate, "duplicate key");
    if (!j.is_object()) throw SchemaError("$", "expected an object");
    return j;
}

std::vector<std::string> stringList(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

template <class F>
auto withPath(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

Coeff expression(const json& j, const std::string& path, const std::vector<std::string>& coords) {
    if (!j.is_string()) throw SchemaError(path, "expected an expression string");
    return withPath(path, [&] { return parseExpr(j.get<std::string>(), coords); });
}

void checkKeys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw SchemaError(where + key, "unknown field");
}

std::size_t frameIndex(const std::string& token, const std::vector<std::string>& frame, const std::string& path) {
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (frame[i] == token) return i;
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
        const unsigned long v = std::stoul(token);
        if (v >= 1 && v <= frame.size()) return v - 1;
    }
    throw SchemaError(path, "'" + token + "' is not a frame index or name");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(' ');
    const auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebroidFile parseAlgebroid(const std::string& text) {
    const json j = parseStrict(text);
    checkKeys(j, {"coordinates", "frame", "coframe", "anchor", "brackets", "metric"}, "$.");
    if (!j.contains("coordinates")) throw SchemaError("$.coordinates", "missing field");
    if (!j.contains("frame")) throw SchemaError("$.frame", "missing field");
    const auto coords = stringList(j["coordinates"], "$.coordinates");
    const auto frame = stringList(j["frame"], "$.frame");
    std::vector<std::string> coframe;
    if (j.contains("coframe")) coframe = stringList(j["coframe"], "$.coframe");
    LieAlgebroid e = withPath("$", [&] { return LieAlgebroid(coords, frame, coframe); });
    const std::size_t n = e.n(), m = e.m();

    if (j.contains("anchor")) {
        const json& a = j["anchor"];
        if (!a.is_array() || a.size() != n) throw SchemaError("$.anchor", "expected " + std::to_string(n) + " rows");
        for (std::size_t i = 0; i < n; ++i) {
            const std::string row = "$.anchor[" + std::to_string(i) + "]";
            if (!a[i].is_array() || a[i].size() != m) throw SchemaError(row, "expected " + std::to_string(m) + " entries");
            for (std::size_t c = 0; c < m; ++c)
                e.setAnchor(i, c, expression(a[i][c], row + "[" + std::to_string(c) + "]", coords));
        }
    } else if (m > 0) {
        throw SchemaError("$.anchor", "missing field");
    }

    if (j.contains("brackets")) {
        const json& b = j["brackets"];
        if (!b.is_object()) throw SchemaError("$.brackets", "expected an object");
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& [key, value] : b.items()) {
            const std::string path = "$.brackets." + key;
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw SchemaError(path, "key must have the form 'i,j'");
            const std::size_t i = frameIndex(trim(key.substr(0, comma)), frame, path);
            const std::size_t k = frameIndex(trim(key.substr(comma + 1)), frame, path);
            if (i == k) throw SchemaError(path, "bracket of a frame element with itself");
            if (!pairs.insert({std::min(i, k), std::max(i, k)}).second)
                throw SchemaError(path, "pair given more than once (brackets are antisymmetric)");
            if (!value.is_string()) throw SchemaError(path, "expected an expression string");
            const Multivector mv = withPath(path, [&] { return parseMultivector(value.get<std::string>(), coords, frame); });
            for (const auto& [mask, c] : mv.terms())
                if (degreeOf(mask) != 1) throw SchemaError(path, "bracket must be a section");
            e.setBracket(i, k, e.toSection(mv));
        }
    }

    AlgebroidFile out{std::move(e), std::nullopt};
    if (j.contains("metric")) {
        const json& g = j["metric"];
        if (!g.is_array() || g.size() != n) throw SchemaError("$.metric", "expected " + std::to_string(n) + " rows");
        CoeffMatrix mat;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string row = "$.metric[" + std::to_string(i) + "]";
            if (!g[i].is_array() || g[i].size() != n) throw SchemaError(row, "expected " + std::to_string(n) + " entries");
            std::vector<Coeff> r;
            for (std::size_t k = 0; k < n; ++k) r.push_back(expression(g[i][k], row + "[" + std::to_string(k) + "]", coords));
            mat.push_back(std::move(r));
        }
        out.metric = withPath("$.metric", [&] { return FiberMetric(std::move(mat)); });
    }
    return out;
}

AlgebroidFile loadAlgebroid(const std::string& path) { return parseAlgebroid(readFile(path)); }

bool isBivectorText(const std::string& text) {
    try {
        return json::parse(text).contains("bivector");
    } catch (const json::exception&) {
        return false;
    }
}

PoissonBivector parseBivector(const std::string& text) {
    const json j = parseStrict(text);
    checkKeys(j, {"coordinates", "bivector"}, "$.");
    if (!j.contains("coordinates")) throw SchemaError("$.coordinates", "missing field");
    if (!j.contains("bivector")) throw SchemaError("$.bivector", "missing field");
    const auto coords = stringList(j["coordinates"], "$.coordinates");
    withPath("$.coordinates", [&] {
        checkNames({coords});
        return 0;
    });
    PoissonBivector p(coords);
    const json& b = j["bivector"];
    if (!b.is_object()) throw SchemaError("$.bivector", "expected an object");
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, value] : b.items()) {
        const std::string path = "$.bivector." + key;
        std::string first, second;
        const auto comma = key.find(',');
        if (comma != std::string::npos) {
            first = trim(key.substr(0, comma));
            second = trim(key.substr(comma + 1));
        } else if (key.size() == 2) {
            first = key.substr(0, 1);
            second = key.substr(1, 1);
        } else {
            throw SchemaError(path, "key must be 'ab' or 'a,b' with 1-based indices");
        }
        std::vector<std::string> indices;
        for (std::size_t i = 0; i < coords.size(); ++i) indices.push_back(std::to_string(i + 1));
        const std::size_t a = frameIndex(first, indices, path), c = frameIndex(second, indices, path);
        if (a >= c) throw SchemaError(path, "indices must satisfy a < b");
        if (!pairs.insert({a, c}).second) throw SchemaError(path, "pair given more than once");
        p.set(a, c, expression(value, path, coords));
    }
    return p;
}

PoissonBivector loadBivector(const std::string& path) { return parseBivector(readFile(path)); }

std::string serializeAlgebroid(const AlgebroidFile& file) {
    const LieAlgebroid& e = file.algebroid;
    const auto& coords = e.coordNames();
    ordered_json j;
    j["coordinates"] = coords;
    j["frame"] = e.frameNames();
    j["coframe"] = e.coframeNames();
    ordered_json anchor = ordered_json::array();
    for (std::size_t i = 0; i < e.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t a = 0; a < e.m(); ++a) row.push_back(e.anchor(i, a).str(coords));
        anchor.push_back(row);
    }
    j["anchor"] = anchor;
    ordered_json brackets = ordered_json::object();
    for (std::size_t i = 0; i < e.n(); ++i)
        for (std::size_t k = i + 1; k < e.n(); ++k) {
            const Multivector mv = e.toMultivector(e.frameBracket(i, k));
            if (!mv.isZero()) brackets[std::to_string(i + 1) + "," + std::to_string(k + 1)] = mv.str(e.frameNames(), coords);
        }
    j["brackets"] = brackets;
    if (file.metric) {
        ordered_json g = ordered_json::array();
        for (const auto& row : file.metric->g) {
            ordered_json r = ordered_json::array();
            for (const auto& c : row) r.push_back(c.str(coords));
            g.push_back(r);
        }
        j["metric"] = g;
    }
    return j.dump(2) + "\n";
}

std::string serializeBivector(const PoissonBivector& p) {
    ordered_json j;
    j["coordinates"] = p.coordNames();
    ordered_json b = ordered_json::object();
    const bool compact = p.m() <= 9;
    for (std::size_t a = 0; a < p.m(); ++a)
        for (std::size_t c = a + 1; c < p.m(); ++c) {
            const Coeff v = p.entry(a, c);
            if (v.isZero()) continue;
            const std::string key = compact ? std::to_string(a + 1) + std::to_string(c + 1)
                                            : std::to_string(a + 1) + "," + std::to_string(c + 1);
            b[key] = v.str(p.coordNames());
        }
    j["bivector"] = b;
    return j.dump(2) + "\n";
}

}  // namespace lacalc
