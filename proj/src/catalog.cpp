#include "ezheeg/catalog.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace ezheeg {

using nlohmann::json;

const EllipticCurveData& Catalog::curve(const std::string& label) const {
    for (const auto& c : curves)
        if (c.label == label) return c;
    throw domain_error("no curve with label " + label + " in the catalog");
}

bool Catalog::has_curve(const std::string& label) const {
    for (const auto& c : curves)
        if (c.label == label) return true;
    return false;
}

std::vector<HeegnerPointData> Catalog::points_for(const std::string& label, long disc) const {
    std::vector<HeegnerPointData> out;
    for (const auto& pt : points)
        if (pt.curve_label == label && (disc == 0 || pt.disc == disc)) out.push_back(pt);
    return out;
}

KPoint to_kpoint(const HeegnerPointData& pd) {
    KPoint P;
    P.infinity = false;
    P.x = pd.x;
    P.y = pd.y;
    return P;
}

namespace {

QuadRatNum parse_coordinate(const json& j) {
    if (!j.is_object() || !j.contains("rat") || !j.contains("sqrt_coeff"))
        throw domain_error("coordinate records need rat and sqrt_coeff fields");
    return {rat_from_string(j["rat"].get<std::string>()),
            rat_from_string(j["sqrt_coeff"].get<std::string>())};
}

} // namespace

Catalog load_catalog_text(const std::string& text) {
    json doc = json::parse(text, nullptr, true, true);
    if (!doc.is_array()) throw domain_error("catalog must be an array of curve records");
    Catalog cat;
    std::set<std::string> seen;
    for (const auto& rec : doc) {
        EllipticCurveData E;
        E.label = rec.at("label").get<std::string>();
        if (!seen.insert(E.label).second)
            throw domain_error("duplicate curve label in catalog: " + E.label);
        auto ai = rec.at("a_invariants");
        if (!ai.is_array() || ai.size() != 5)
            throw domain_error("a_invariants must have five entries");
        for (int i = 0; i < 5; ++i) E.a[i] = ai[i].get<long>();
        E.conductor = rec.at("conductor").get<long>();
        E.p = rec.at("p").get<long>();
        if (E.discriminant() == 0)
            throw domain_error("singular curve in catalog: " + E.label);
        cat.curves.push_back(E);
        if (!rec.contains("heegner_points")) continue;
        for (const auto& pj : rec["heegner_points"]) {
            HeegnerPointData pd;
            pd.curve_label = E.label;
            pd.disc = pj.at("disc").get<long>();
            pd.x = parse_coordinate(pj.at("x"));
            pd.y = parse_coordinate(pj.at("y"));
            pd.provenance = pj.value("provenance", "");
            KPoint P = to_kpoint(pd);
            if (!on_curve_exact(E, P, pd.disc)) {
                std::ostringstream os;
                os << "rejected point on " << E.label << " (disc " << pd.disc
                   << "): curve equation fails exactly";
                cat.rejects.push_back(os.str());
                continue;
            }
            cat.points.push_back(pd);
        }
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open catalog file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog_text(ss.str());
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("EZHEEG_CATALOG")) return env;
#ifdef EZHEEG_BUNDLED_CATALOG
    return EZHEEG_BUNDLED_CATALOG;
#else
    return "data/catalog.json";
#endif
}

void RunConfig::validate() const {
    if (p < 5) throw precondition_error("p must be at least 5");
    if (prec < 10) throw precondition_error("precision must be at least 10");
    if (qprec < 10) throw precondition_error("q-truncation must be at least 10");
    if (tprec < 2) throw precondition_error("T-truncation must be at least 2");
    if (w != 1 && w != -1) throw precondition_error("w must be +1 or -1");
    if (jet_order < 1 || jet_order >= p)
        throw precondition_error("jet order must lie in [1, p)");
    if (format != "text" && format != "json") throw precondition_error("unknown format");
}

} // namespace ezheeg
