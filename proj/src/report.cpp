#include "tropical/report.hpp"

#include <json.hpp>

namespace tropical {

namespace {

using Json = nlohmann::ordered_json;

Json point(const RationalVector &p) {
    Json arr = Json::array();
    for (const auto &x : p)
        arr.push_back(to_string(x));
    return arr;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

} // namespace

std::string report_json(const ContainmentReport &report) {
    Json doc;
    doc["verdict"] = report.contained() ? "contained" : "not_contained";
    if (report.contained()) {
        Json certs = Json::array();
        for (const auto &c : report.certificates) {
            Json entry;
            entry["vertex"] = point(c.vertex);
            entry["anchor"] = point(c.anchor);
            entry["t_max"] = c.t_max.is_infinite() ? std::string("inf") : to_string(*c.t_max.finite);
            certs.push_back(std::move(entry));
        }
        doc["certificates"] = std::move(certs);
        doc["t0"] = to_string(*report.t0);
        return dump(doc);
    }
    doc["failing_vertex"] = point(*report.failing_vertex);
    if (!report.all_failing.empty()) {
        Json all = Json::array();
        for (const auto &v : report.all_failing)
            all.push_back(point(v));
        doc["failing_vertices"] = std::move(all);
    }
    if (report.witness_searched) {
        doc["witness_status"] = report.witness ? "found" : "not_found";
        doc["witness"] = report.witness ? point(*report.witness) : Json(nullptr);
    }
    return dump(doc);
}

std::string newton_json(const NewtonPolyhedron &p) {
    Json doc;
    doc["n"] = p.num_vars();
    Json verts = Json::array();
    for (const auto &v : p.vertices())
        verts.push_back(point(v));
    doc["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto &c : p.constraints()) {
        Json entry;
        Json normal = Json::array();
        for (const auto &z : c.normal) {
            if (z.fits_slong_p())
                normal.push_back(z.get_si());
            else
                normal.push_back(to_string(z));
        }
        entry["normal"] = std::move(normal);
        entry["offset"] = to_string(c.offset);
        entry["kind"] = c.kind == ConstraintKind::Equality ? "eq" : "ineq";
        facets.push_back(std::move(entry));
    }
    doc["facets"] = std::move(facets);
    return dump(doc);
}

std::string oracle_json(const OracleVerdict &verdict) {
    Json doc;
    doc["verdict"] = verdict.agrees_contained() ? "agrees_contained" : "counterexample";
    doc["exact"] = verdict.exact;
    if (verdict.counterexample)
        doc["counterexample"] = point(*verdict.counterexample);
    return dump(doc);
}

} // namespace tropical
