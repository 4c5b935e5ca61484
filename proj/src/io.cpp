#include "cdanalysis/io.hpp"

#include <cmath>
#include <sstream>

namespace cd {

nlohmann::json to_json(const CdNumber& z) {
    return nlohmann::json{{"level", z.level()}, {"coeffs", z.coeffs()}};
}

CdNumber cdnumber_from_json(const nlohmann::json& j) {
    if (j.is_number()) return CdNumber::real(j.get<double>());
    if (j.is_array()) {
        const auto coeffs = j.get<std::vector<double>>();
        int level = 0;
        while ((1u << level) < coeffs.size()) ++level;
        std::vector<double> padded = coeffs;
        padded.resize(1u << level, 0.0);
        return CdNumber::from_coeffs(level, padded);
    }
    const int level = j.at("level").get<int>();
    return CdNumber::from_coeffs(level, j.at("coeffs").get<std::vector<double>>());
}

nlohmann::json to_json(const ExtensionSpec& spec) {
    nlohmann::json j;
    switch (spec.kind()) {
        case ExtensionSpec::Kind::power_series: j["kind"] = "power_series"; break;
        case ExtensionSpec::Kind::exp_sum: j["kind"] = "exp_sum"; break;
        case ExtensionSpec::Kind::callable: j["kind"] = "callable"; break;
    }
    j["coefficients"] = spec.coeffs();
    if (spec.kind() == ExtensionSpec::Kind::exp_sum) j["rates"] = spec.rates();
    if (spec.kind() == ExtensionSpec::Kind::power_series) j["radius"] = spec.radius();
    j["center"] = spec.center();
    j["level"] = spec.level();
    j["spherical"] = spec.spherical();
    return j;
}

ExtensionSpec extension_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const double center = j.value("center", 0.0);
    const int level = j.value("level", 2);
    const bool spherical = j.value("spherical", false);
    if (kind == "power_series") {
        return ExtensionSpec::power_series(j.at("coefficients").get<std::vector<double>>(),
                                           center, j.value("radius", 1.0), level, spherical);
    }
    if (kind == "exp_sum") {
        return ExtensionSpec::exp_sum(j.at("coefficients").get<std::vector<double>>(),
                                      j.at("rates").get<std::vector<double>>(), center, level,
                                      spherical);
    }
    raise(ErrorKind::ParseError, "cannot deserialize seed kind '" + kind + "'");
}

Path path_from_json(const nlohmann::json& j) {
    const std::string interp = j.value("interp", "linear");
    const bool closed = j.value("closed", false);
    struct Point {
        double t;
        CdNumber z;
    };
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
        pts.push_back({p.at("t").get<double>(), cdnumber_from_json(p.at("coeffs"))});
    }
    if (pts.size() < 2) raise(ErrorKind::ParseError, "path needs at least two control points");
    for (std::size_t k = 1; k < pts.size(); ++k) {
        if (!(pts[k].t > pts[k - 1].t))
            raise(ErrorKind::ParseError, "path parameters must increase");
    }

    Path path;
    path.closed = closed;
    if (interp == "linear") {
        path.map = [pts](double t) {
            const double tt = pts.front().t + (pts.back().t - pts.front().t) * t;
            std::size_t k = 1;
            while (k + 1 < pts.size() && pts[k].t < tt) ++k;
            const double span = pts[k].t - pts[k - 1].t;
            const double u = span > 0.0 ? (tt - pts[k - 1].t) / span : 0.0;
            return (1.0 - u) * pts[k - 1].z + u * pts[k].z;
        };
        return path;
    }
    if (interp == "arc") {
        const CdNumber center = cdnumber_from_json(j.at("center"));
        path.map = [pts, center](double t) {
            const double tt = pts.front().t + (pts.back().t - pts.front().t) * t;
            std::size_t k = 1;
            while (k + 1 < pts.size() && pts[k].t < tt) ++k;
            const double span = pts[k].t - pts[k - 1].t;
            const double u = span > 0.0 ? (tt - pts[k - 1].t) / span : 0.0;
            // Geodesic sweep between the radius vectors with radius blended.
            const CdNumber a = pts[k - 1].z - center;
            const CdNumber b = pts[k].z - center;
            const double ra = norm(a), rb = norm(b);
            if (ra == 0.0 || rb == 0.0)
                raise(ErrorKind::ParseError, "arc control point coincides with the center");
            const CdNumber ua = a / ra, ub = b / rb;
            double c = 0.0;
            for (int i = 0; i < std::max(ua.dim(), ub.dim()); ++i)
                c += ua.coeff(i) * ub.coeff(i);
            c = std::clamp(c, -1.0, 1.0);
            const double angle = std::acos(c);
            const double radius = (1.0 - u) * ra + u * rb;
            if (angle < 1e-12) return center + radius * ua;
            const double s0 = std::sin((1.0 - u) * angle) / std::sin(angle);
            const double s1 = std::sin(u * angle) / std::sin(angle);
            CdNumber dir = s0 * ua + s1 * ub;
            return center + (radius / norm(dir)) * dir;
        };
        return path;
    }
    raise(ErrorKind::ParseError, "unknown interpolation tag '" + interp + "'");
}

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = value;
    }
    return out;
}

} // namespace cd
