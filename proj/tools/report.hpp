#pragma once

#include <json.hpp>

#include "squarepeg/geometry.hpp"
#include "squarepeg/inscribe.hpp"
#include "squarepeg/obtuseness.hpp"
#include "squarepeg/table.hpp"
#include "squarepeg/triviality.hpp"

namespace squarepeg::report {

using nlohmann::json;

inline json to_json(const Point2& p) { return json::array({p.x, p.y}); }

inline json to_json(const Square& sq) {
    json j;
    j["center"] = to_json(sq.center);
    j["side"] = sq.side;
    j["rotation"] = sq.rotation;
    auto verts = json::array();
    for (const Point2& v : square_vertices(sq)) verts.push_back(to_json(v));
    j["vertices"] = verts;
    return j;
}

inline json to_json(const SectorCertificate& c) {
    json j;
    j["apex"] = to_json(c.apex);
    j["v"] = to_json(c.v);
    j["theta"] = c.theta;
    j["delta"] = c.delta;
    return j;
}

inline json to_json(const ObtusenessReport& r, bool include_per_point = false) {
    json j;
    j["obtuse"] = r.obtuse;
    j["angle_criterion"] = r.angle_criterion;
    j["disagreement"] = r.disagreement;
    j["delta_used"] = r.delta_used;
    j["strictness_margin"] = r.strictness_margin;
    j["min_interior_angle"] = r.min_interior_angle;
    j["worst_point"] = to_json(r.worst_point);
    j["worst_value"] = r.worst_value;
    j["points_probed"] = r.per_point.size();
    if (include_per_point) {
        auto arr = json::array();
        for (const auto& pp : r.per_point) {
            json e;
            e["point"] = to_json(pp.point);
            e["value"] = pp.value;
            if (pp.certificate) e["certificate"] = to_json(*pp.certificate);
            arr.push_back(e);
        }
        j["per_point"] = arr;
    }
    return j;
}

inline json to_json(const TrivialityVerdict& v) {
    json j;
    j["s"] = v.s;
    j["trivial"] = v.trivial;
    j["grid"] = v.grid;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline json to_json(const DirectionArc& a) {
    json j;
    j["base_point"] = to_json(a.base_point);
    j["phi"] = a.phi;
    j["psi"] = a.psi;
    j["width"] = a.width();
    j["samples_consistent"] = a.samples_consistent;
    return j;
}

inline json to_json(const LevelSquare& ls) {
    json j;
    j["square"] = to_json(ls.square);
    j["y"] = ls.y;
    j["residual"] = ls.residual;
    j["center_in_body"] = ls.center_in_body;
    j["trivial"] = ls.trivial;
    j["start_index"] = ls.start_index;
    return j;
}

inline json to_json(const InscribedSquareResult& r) {
    json j;
    j["square"] = to_json(r.square);
    j["max_boundary_distance"] = r.max_boundary_distance;
    j["method"] = r.method;
    j["trace"] = {{"s_star_used", r.trace.s_star_used},
                  {"d_used", r.trace.d_used},
                  {"y", r.trace.y},
                  {"residual", r.trace.residual}};
    return j;
}

inline json to_json(const InscribedReport& r) {
    json j;
    j["max_boundary_distance"] = r.max_boundary_distance;
    j["side_spread"] = r.side_spread;
    j["diagonal_orthogonality_error"] = r.diagonal_orthogonality_error;
    j["pass"] = r.pass;
    return j;
}

}  // namespace squarepeg::report
