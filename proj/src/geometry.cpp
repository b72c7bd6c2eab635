#include "linkcert/geometry.hpp"

#include <nlohmann/json.hpp>

#include "linkcert/errors.hpp"

namespace linkcert {

namespace {

// Coordinates below 2^20 keep the 3x3 determinant inside __int128 with a
// wide margin, which makes the O(n^4) validation loops practical.
constexpr long long kSmallCoord = 1LL << 20;

struct SmallPoint {
    long long x, y, z;
};

bool small_enough(const Point3& p, SmallPoint& out) {
    if (abs(p.x) > kSmallCoord || abs(p.y) > kSmallCoord || abs(p.z) > kSmallCoord) return false;
    out = {p.x.convert_to<long long>(), p.y.convert_to<long long>(),
           p.z.convert_to<long long>()};
    return true;
}

__int128 orient3d_small(const SmallPoint& a, const SmallPoint& b, const SmallPoint& c,
                        const SmallPoint& d) {
    const long long ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const long long vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    const long long wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
    return static_cast<__int128>(ux) * (static_cast<__int128>(vy) * wz -
                                        static_cast<__int128>(vz) * wy) -
           static_cast<__int128>(uy) * (static_cast<__int128>(vx) * wz -
                                        static_cast<__int128>(vz) * wx) +
           static_cast<__int128>(uz) * (static_cast<__int128>(vx) * wy -
                                        static_cast<__int128>(vy) * wx);
}

bool collinear_small(const SmallPoint& a, const SmallPoint& b, const SmallPoint& c) {
    const long long ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const long long vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    return static_cast<__int128>(uy) * vz == static_cast<__int128>(uz) * vy &&
           static_cast<__int128>(uz) * vx == static_cast<__int128>(ux) * vz &&
           static_cast<__int128>(ux) * vy == static_cast<__int128>(uy) * vx;
}

}  // namespace

BigInt orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const BigInt ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const BigInt vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    const BigInt wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
    return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
    const BigInt ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const BigInt vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    return uy * vz == uz * vy && uz * vx == ux * vz && ux * vy == uy * vx;
}

std::string ValidationReport::summary() const {
    if (issues.empty()) return "ok";
    std::string s;
    for (const auto& issue : issues) {
        if (!s.empty()) s += "; ";
        s += issue.message;
    }
    return s;
}

namespace {

std::string tuple_str(const std::vector<int>& vs) {
    std::string s = "(";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + ")";
}

}  // namespace

ValidationReport validate_embedding(const Embedding& emb, int max_issues) {
    ValidationReport report;
    const auto& c = emb.coords;
    const int n = emb.n();
    auto full = [&] { return static_cast<int>(report.issues.size()) >= max_issues; };

    for (int i = 0; i < n && !full(); ++i)
        for (int j = i + 1; j < n && !full(); ++j)
            if (c[i] == c[j])
                report.issues.push_back({ValidationIssue::DuplicateVertices,
                                         {i, j},
                                         "duplicate vertices " + tuple_str({i, j})});
    if (!report.ok()) return report;

    std::vector<SmallPoint> small(n);
    bool fast = true;
    for (int i = 0; i < n && fast; ++i) fast = small_enough(c[i], small[i]);

    for (int i = 0; i < n && !full(); ++i)
        for (int j = i + 1; j < n && !full(); ++j)
            for (int k = j + 1; k < n && !full(); ++k) {
                const bool bad = fast ? collinear_small(small[i], small[j], small[k])
                                      : collinear(c[i], c[j], c[k]);
                if (bad)
                    report.issues.push_back({ValidationIssue::CollinearTriple,
                                             {i, j, k},
                                             "collinear triple " + tuple_str({i, j, k})});
            }
    if (!report.ok()) return report;

    for (int i = 0; i < n && !full(); ++i)
        for (int j = i + 1; j < n && !full(); ++j)
            for (int k = j + 1; k < n && !full(); ++k)
                for (int l = k + 1; l < n && !full(); ++l) {
                    const bool bad = fast
                                         ? orient3d_small(small[i], small[j], small[k],
                                                          small[l]) == 0
                                         : orient3d(c[i], c[j], c[k], c[l]) == 0;
                    if (bad)
                        report.issues.push_back({ValidationIssue::CoplanarQuadruple,
                                                 {i, j, k, l},
                                                 "coplanar quadruple " + tuple_str({i, j, k, l})});
                }
    return report;
}

bool new_point_keeps_valid(const std::vector<Point3>& coords, int k) {
    const auto& p = coords[k];
    for (int i = 0; i < k; ++i)
        if (coords[i] == p) return false;

    std::vector<SmallPoint> small(k + 1);
    bool fast = true;
    for (int i = 0; i <= k && fast; ++i) fast = small_enough(coords[i], small[i]);
    if (fast) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (collinear_small(small[i], small[j], small[k])) return false;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    if (orient3d_small(small[i], small[j], small[l], small[k]) == 0) return false;
        return true;
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (collinear(coords[i], coords[j], p)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (orient3d(coords[i], coords[j], coords[l], p) == 0) return false;
    return true;
}

std::string Embedding::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : coords)
        arr.push_back({p.x.str(), p.y.str(), p.z.str()});
    j["coords"] = std::move(arr);
    return j.dump();
}

Embedding Embedding::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("embedding JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("coords") || !j["coords"].is_array())
        throw PreconditionError("embedding JSON must have fields n and coords");
    Embedding emb;
    for (const auto& row : j["coords"]) {
        if (!row.is_array() || row.size() != 3)
            throw PreconditionError("each coordinate must be a [x,y,z] string triple");
        Point3 p;
        p.x = BigInt(row[0].get<std::string>());
        p.y = BigInt(row[1].get<std::string>());
        p.z = BigInt(row[2].get<std::string>());
        emb.coords.push_back(std::move(p));
    }
    if (j["n"].get<int>() != emb.n())
        throw PreconditionError("embedding JSON: n does not match coords length");
    return emb;
}

}  // namespace linkcert
