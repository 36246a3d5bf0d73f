#pragma once

#include <string>

#include <json.hpp>

#include "nearcover/solver.hpp"

namespace nearcover {

/// On-disk point set: rational coordinates are "num/den" strings,
/// residues plain integers with (p, k) in the header. Duplicate points
/// are rejected on read.
struct PointSetFile {
    bool padic = false;
    int n = 2;
    std::int64_t p = 0; // padic only
    std::int64_t k = 0; // padic only
    std::vector<RatPoint> rat_points;
    std::vector<PadicPoint> padic_points;
    nlohmann::json provenance; // optional construction record

    RingCtx ring() const { return make_ring(p, k); }
};

std::string format_rational(const Rat& q);
Rat parse_rational(const std::string& s);

nlohmann::json to_json(const PointSetFile& f);
PointSetFile point_set_from_json(const nlohmann::json& j);

PointSetFile read_point_set_file(const std::string& path);
void write_point_set_file(const std::string& path, const PointSetFile& f);

nlohmann::json to_json(const RingCtx& R, const PadicCertificate& cert);
PadicCertificate padic_certificate_from_json(const RingCtx& R, const nlohmann::json& j);

nlohmann::json to_json(const RationalCertificate& cert);
RationalCertificate rational_certificate_from_json(const nlohmann::json& j);

/// Stable text form used everywhere a report or test prints JSON.
std::string dump_json(const nlohmann::json& j);

} // namespace nearcover
