#pragma once

// JSON function files shared by every value type:
//
//   {"kind": "primitive" | "bv" | "l1" | "test",
//    "breakpoints": [x0, ..., xn],
//    "pieces": [[c0, c1, ...], ...],   // local coordinate t = x - x_i
//    "left_tail": r, "right_tail": r,
//    "point_values": [[x, v], ...]}    // optional, "bv" only
//
// Jumps are implicit in mismatching one-sided limits.

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpint/bv.hpp"
#include "cpint/convolution.hpp"
#include "cpint/primitive.hpp"

namespace cpint::io {

using nlohmann::json;

struct FunctionFile {
    std::string kind;
    PiecewisePolynomial rep;
    std::map<double, double> point_values;
};

inline FunctionFile parse_function(const json& j) {
    try {
        FunctionFile out;
        out.kind = j.at("kind").get<std::string>();
        if (out.kind != "primitive" && out.kind != "bv" && out.kind != "l1" && out.kind != "test")
            throw InputError("unknown kind '" + out.kind + "'");
        auto bp = j.at("breakpoints").get<std::vector<double>>();
        std::vector<Polynomial> pieces;
        for (const auto& row : j.at("pieces")) pieces.emplace_back(row.get<std::vector<double>>());
        out.rep = PiecewisePolynomial(std::move(bp), std::move(pieces), j.value("left_tail", 0.0),
                                      j.value("right_tail", 0.0));
        if (j.contains("point_values")) {
            if (out.kind != "bv") throw InputError("point_values are only allowed for kind 'bv'");
            for (const auto& pv : j.at("point_values")) {
                if (!pv.is_array() || pv.size() != 2) throw InputError("point_values entries must be [x, v]");
                out.point_values[pv[0].get<double>()] = pv[1].get<double>();
            }
        }
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed function file: ") + e.what());
    }
}

inline json to_json(const std::string& kind, const PiecewisePolynomial& rep,
                    const std::map<double, double>& point_values = {}) {
    json j;
    j["kind"] = kind;
    j["breakpoints"] = rep.breakpoints();
    json pieces = json::array();
    for (const auto& p : rep.pieces()) pieces.push_back(std::vector<double>(p.coeffs().begin(), p.coeffs().end()));
    j["pieces"] = std::move(pieces);
    j["left_tail"] = rep.left_tail();
    j["right_tail"] = rep.right_tail();
    if (!point_values.empty()) {
        json pv = json::array();
        for (const auto& [x, v] : point_values) pv.push_back({x, v});
        j["point_values"] = std::move(pv);
    }
    return j;
}

inline json to_json(const ContinuousPrimitive& F) { return to_json("primitive", F.rep()); }
inline json to_json(const Distribution& f) { return to_json(f.primitive()); }
inline json to_json(const BVFunction& g) { return to_json("bv", g.rep(), g.point_values()); }
inline json to_json(const L1Function& g) { return to_json("l1", g.rep()); }
inline json to_json(const TestFunction& phi) { return to_json("test", phi.rep()); }
inline json to_json(const ExtendedContinuousFunction& h) { return to_json("bv", h.rep()); }

inline json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

inline void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

inline void expect_kind(const FunctionFile& f, std::initializer_list<const char*> kinds) {
    for (const char* k : kinds)
        if (f.kind == k) return;
    throw InputError("unexpected kind '" + f.kind + "'");
}

inline Distribution distribution_from(const FunctionFile& f) {
    expect_kind(f, {"primitive"});
    return make_distribution(f.rep);
}

inline BVFunction bv_from(const FunctionFile& f) {
    expect_kind(f, {"bv", "l1"});
    return BVFunction(f.rep, f.point_values);
}

inline L1Function l1_from(const FunctionFile& f) {
    expect_kind(f, {"l1"});
    return L1Function(f.rep);
}

inline TestFunction test_from(const FunctionFile& f) {
    expect_kind(f, {"test"});
    return TestFunction(f.rep);
}

inline FunctionFile load(const std::string& path) { return parse_function(read_json(path)); }

} // namespace cpint::io
