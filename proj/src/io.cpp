#include "nearcover/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nearcover {

using nlohmann::json;

std::string format_rational(const Rat& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

Rat parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw FileFormatError("zero denominator in rational");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw FileFormatError("malformed rational: " + s);
    }
}

json to_json(const PointSetFile& f) {
    json j;
    j["space"] = f.padic ? "padic" : "rational";
    j["n"] = f.n;
    if (f.padic) {
        j["p"] = f.p;
        j["k"] = f.k;
        json pts = json::array();
        for (const PadicPoint& x : f.padic_points) pts.push_back({x.x1, x.x2});
        j["points"] = std::move(pts);
    } else {
        json pts = json::array();
        for (const RatPoint& x : f.rat_points) {
            json row = json::array();
            for (const Rat& c : x) row.push_back(format_rational(c));
            pts.push_back(std::move(row));
        }
        j["points"] = std::move(pts);
    }
    if (!f.provenance.is_null()) j["provenance"] = f.provenance;
    return j;
}

PointSetFile point_set_from_json(const json& j) {
    PointSetFile f;
    const std::string space = j.at("space").get<std::string>();
    if (space != "padic" && space != "rational")
        throw FileFormatError("space must be 'padic' or 'rational'");
    f.padic = space == "padic";
    f.n = j.at("n").get<int>();
    if (f.padic) {
        if (f.n != 2) throw FileFormatError("padic point sets live in dimension 2");
        f.p = j.at("p").get<std::int64_t>();
        f.k = j.at("k").get<std::int64_t>();
        const RingCtx R = f.ring();
        for (const json& row : j.at("points")) {
            if (row.size() != 2) throw FileFormatError("padic point needs 2 residues");
            const std::int64_t a = row[0].get<std::int64_t>();
            const std::int64_t b = row[1].get<std::int64_t>();
            if (a < 0 || a >= R.modulus || b < 0 || b >= R.modulus)
                throw FileFormatError("residue out of [0, p^k)");
            f.padic_points.push_back({a, b});
        }
        std::set<PadicPoint> seen(f.padic_points.begin(), f.padic_points.end());
        if (seen.size() != f.padic_points.size())
            throw FileFormatError("duplicate points in file");
    } else {
        for (const json& row : j.at("points")) {
            if (static_cast<int>(row.size()) != f.n)
                throw FileFormatError("point dimension disagrees with header");
            RatPoint x;
            for (const json& c : row) x.push_back(parse_rational(c.get<std::string>()));
            f.rat_points.push_back(std::move(x));
        }
        std::set<std::vector<Rat>> seen(f.rat_points.begin(), f.rat_points.end());
        if (seen.size() != f.rat_points.size())
            throw FileFormatError("duplicate points in file");
    }
    if (j.contains("provenance")) f.provenance = j.at("provenance");
    return f;
}

PointSetFile read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FileFormatError(std::string("bad JSON: ") + e.what());
    }
    return point_set_from_json(j);
}

void write_point_set_file(const std::string& path, const PointSetFile& f) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot write " + path);
    out << dump_json(to_json(f)) << "\n";
}

json to_json(const RingCtx&, const PadicCertificate& cert) {
    json j;
    j["backend"] = "padic";
    j["budget"] = cert.budget;
    json lines = json::array();
    for (const PadicLine& L : cert.lines) {
        json l;
        l["direction"] = {{"unit_first", L.dir.unit_first}, {"param", L.dir.param}};
        l["base"] = {L.base.x1, L.base.x2};
        lines.push_back(std::move(l));
    }
    j["lines"] = std::move(lines);
    json singles = json::array();
    for (const PadicPoint& x : cert.singletons) singles.push_back({x.x1, x.x2});
    j["singletons"] = std::move(singles);
    j["assignment"] = cert.assignment;
    return j;
}

PadicCertificate padic_certificate_from_json(const RingCtx& R, const json& j) {
    if (j.at("backend").get<std::string>() != "padic")
        throw FileFormatError("expected a padic certificate");
    PadicCertificate cert;
    cert.budget = j.at("budget").get<int>();
    for (const json& l : j.at("lines")) {
        Direction d{l.at("direction").at("unit_first").get<bool>(),
                    l.at("direction").at("param").get<std::int64_t>()};
        if (d.param < 0 || d.param >= R.modulus || (!d.unit_first && d.param % R.p != 0))
            throw FileFormatError("non-canonical direction in certificate");
        PadicPoint base{l.at("base")[0].get<std::int64_t>(),
                        l.at("base")[1].get<std::int64_t>()};
        cert.lines.push_back({d, reduce(R, base)});
    }
    for (const json& s : j.at("singletons"))
        cert.singletons.push_back({s[0].get<std::int64_t>(), s[1].get<std::int64_t>()});
    cert.assignment = j.at("assignment").get<std::vector<int>>();
    return cert;
}

json to_json(const RationalCertificate& cert) {
    json j;
    j["backend"] = "rational";
    j["vector"] = cert.dims.entries;
    json objects = json::array();
    for (const auto& part : cert.parts) {
        json span = json::array();
        for (const RatPoint& x : part) {
            json row = json::array();
            for (const Rat& c : x) row.push_back(format_rational(c));
            span.push_back(std::move(row));
        }
        objects.push_back({{"spanning_points", std::move(span)}});
    }
    j["objects"] = std::move(objects);
    j["assignment"] = cert.assignment;
    return j;
}

RationalCertificate rational_certificate_from_json(const json& j) {
    if (j.at("backend").get<std::string>() != "rational")
        throw FileFormatError("expected a rational certificate");
    RationalCertificate cert;
    cert.dims = make_dimension_vector(j.at("vector").get<std::vector<int>>());
    for (const json& obj : j.at("objects")) {
        std::vector<RatPoint> part;
        for (const json& row : obj.at("spanning_points")) {
            RatPoint x;
            for (const json& c : row) x.push_back(parse_rational(c.get<std::string>()));
            part.push_back(std::move(x));
        }
        cert.parts.push_back(std::move(part));
    }
    cert.assignment = j.at("assignment").get<std::vector<int>>();
    return cert;
}

std::string dump_json(const json& j) { return j.dump(2); }

} // namespace nearcover
