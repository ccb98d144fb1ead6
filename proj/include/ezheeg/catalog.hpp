#pragma once

#include "ezheeg/curve.hpp"
#include "ezheeg/heegner.hpp"

#include <string>
#include <vector>

namespace ezheeg {

struct Catalog {
    std::vector<EllipticCurveData> curves;
    std::vector<HeegnerPointData> points;
    std::vector<std::string> rejects; // diagnostics for rejected point records

    const EllipticCurveData& curve(const std::string& label) const;
    bool has_curve(const std::string& label) const;
    std::vector<HeegnerPointData> points_for(const std::string& label, long disc = 0) const;
};

// load and validate; off-curve point records are rejected with diagnostics,
// duplicate labels and malformed schema abort the load
Catalog load_catalog(const std::string& path);
Catalog load_catalog_text(const std::string& json_text);

// EZHEEG_CATALOG environment override, else the bundled data file
std::string default_catalog_path();

KPoint to_kpoint(const HeegnerPointData& pd);

struct RunConfig {
    long p = 5;
    int prec = 20;        // p-adic precision M
    long qprec = 200;     // q-expansion truncation
    int tprec = 6;        // T-truncation for tower classes
    long disc = -11;
    std::string curve_label = "15a1";
    int w = -1;
    int jet_order = 3;
    std::string format = "text"; // or "json"

    void validate() const;
};

} // namespace ezheeg
