#include "quaddyn/json_io.hpp"

#include "quaddyn/errors.hpp"

namespace quaddyn {

namespace {

Integer int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw DomainError(std::string("JSON: missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) return Integer(v.get<std::string>());
    throw DomainError(std::string("JSON: field \"") + key + "\" must be an integer");
}

Rational rat_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return 0;
    const auto& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw DomainError(std::string("JSON: field \"") + key + "\" must be a rational string");
}

}  // namespace

Json to_json(const QuadElem& x) {
    Json j;
    j["d"] = x.d().fits_slong_p() ? Json(x.d().get_si()) : Json(x.d().get_str());
    j["a"] = x.a().get_str();
    j["b"] = x.b().get_str();
    return j;
}

QuadElem quad_from_json(const nlohmann::json& j) {
    if (j.is_string()) return QuadElem(parse_rational(j.get<std::string>()));
    if (!j.is_object()) throw DomainError("JSON: field element must be an object");
    Integer d = j.contains("d") ? int_field(j, "d") : Integer(1);
    return QuadElem(d, rat_field(j, "a"), rat_field(j, "b"));
}

Json to_json(const Portrait& p) {
    Json j;
    j["n"] = p.size();
    j["succ"] = p.succ;
    if (p.label) j["label"] = *p.label;
    return j;
}

Portrait portrait_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("succ") || !j.at("succ").is_array()) throw DomainError("JSON: portrait needs a succ array");
    std::vector<int> succ;
    for (const auto& v : j.at("succ")) {
        if (!v.is_number_integer()) throw DomainError("JSON: succ entries must be integers");
        succ.push_back(v.get<int>());
    }
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(succ.size()))
        throw DomainError("JSON: portrait n does not match succ length");
    std::optional<std::string> label;
    if (j.contains("label") && j.at("label").is_string()) label = j.at("label").get<std::string>();
    return Portrait(succ, label);
}

Json to_json(const CatalogEntry& e) {
    Json j = to_json(e.portrait);
    j["label"] = e.label;
    j["gamma"] = to_string(e.gamma);
    j["status"] = e.verified ? "verified-by-realization" : "unverified-by-realization";
    if (e.realization) {
        Json r;
        r["c"] = to_json(e.realization->c);
        r["d"] = e.realization->d.get_si();
        j["realization"] = r;
    }
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

CatalogEntry catalog_entry_from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.portrait = portrait_from_json(j);
    if (!e.portrait.label) throw DomainError("catalog: entry without label");
    e.label = *e.portrait.label;
    e.gamma = parse_gamma(j.value("gamma", std::string("other")));
    e.verified = j.value("status", std::string("unverified-by-realization")) == "verified-by-realization";
    if (j.contains("realization")) {
        const auto& r = j.at("realization");
        Realization real;
        real.d = r.contains("d") ? int_field(r, "d") : Integer(1);
        real.c = quad_from_json(r.at("c"));
        e.realization = real;
    }
    e.note = j.value("note", std::string());
    return e;
}

Json to_json(const PortraitResult& r) {
    Json j;
    j["c"] = to_json(r.c);
    j["field_d"] = r.field.d.get_si();
    j["n_max"] = r.n_max;
    j["depth_max"] = r.depth_max;
    j["portrait"] = to_json(r.portrait);
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        Json p;
        p["vertex"] = i;
        p["value"] = to_json(r.points[i].value);
        p["text"] = r.points[i].value.to_string();
        p["preperiod"] = r.points[i].preperiod;
        p["period"] = r.points[i].period;
        pts.push_back(p);
    }
    j["points"] = pts;
    return j;
}

Json to_json(const ScanReport& r) {
    Json j;
    j["source"] = r.source;
    j["height"] = r.height;
    j["n_max"] = r.n_max;
    j["scanned"] = r.scanned;
    j["skipped"] = r.skipped;
    Json t = Json::object();
    for (const auto& [k, v] : r.tally) t[k] = v;
    j["tally"] = t;
    j["unclassified"] = r.unclassified;
    if (r.source != "rational") {
        Json recs = Json::array();
        for (const auto& x : r.records) {
            Json e;
            e["source"] = x.source;
            e["c"] = to_json(x.c);
            e["c_text"] = x.c.to_string();
            e["d"] = x.d.get_str();
            e["label"] = x.label;
            e["classified"] = x.classified;
            e["c_rational"] = x.c_rational;
            e["strictly_larger_than_rational"] = x.strictly_larger;
            e["contains_target"] = x.contains_target;
            recs.push_back(e);
        }
        j["records"] = recs;
    }
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

Json to_json(const CheckRow& r) {
    Json j;
    j["id"] = r.id;
    j["group"] = r.group;
    j["title"] = r.title;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["seconds"] = r.seconds;
    return j;
}

Json to_json(const DensityReport& r) {
    Json j;
    j["limit"] = r.limit;
    j["primes"] = r.primes;
    j["without_root"] = r.in_pi;
    j["density"] = r.density.get_str();
    j["density_approx"] = r.density.get_d();
    j["kind"] = "natural density proxy";
    return j;
}

Json to_json(const QuadraticPointRecord& r) {
    Json j;
    j["label"] = r.label;
    j["x"] = to_json(r.x);
    j["d"] = r.d.get_str();
    j["y"] = to_json(r.y);
    j["degenerate"] = r.degenerate;
    if (r.c) {
        j["c"] = to_json(*r.c);
        j["c_text"] = r.c->to_string();
    } else {
        j["c"] = nullptr;
    }
    return j;
}

}  // namespace quaddyn
