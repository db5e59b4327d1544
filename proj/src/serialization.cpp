#include "torsionforge/serialization.hpp"

#include <cstdio>
#include <vector>

#include "torsionforge/jacobian.hpp"

namespace torsionforge {

namespace {

Rational rational_from_json_value(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw ParseError("expected a rational encoded as a string");
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(trimmed(s.substr(start)));
            return parts;
        }
        parts.push_back(trimmed(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

}  // namespace

Json poly_to_json(const Polynomial<Rational>& f) {
    Json j = Json::array();
    for (const auto& c : f.coefficients()) j.push_back(to_string(c));
    return j;
}

Polynomial<Rational> poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_json_value(c));
    return Polynomial<Rational>::from_coefficients(coeffs);
}

Json point_to_json(const AffinePoint& point) {
    return Json::array({to_string(point.x), to_string(point.y)});
}

AffinePoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a pair [x, y]");
    return {rational_from_json_value(j[0]), rational_from_json_value(j[1])};
}

std::string curve_fingerprint(const Polynomial<Rational>& f_int) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(curve_tag_of(f_int)));
    return std::string(buf);
}

Json curve_model_to_json(const CurveModel& curve, bool include_integral_points) {
    Json j;
    j["family"] = family_name(curve.params.family);
    j["g"] = curve.params.g;
    Json params = Json::object();
    if (curve.params.family == Family::Thm41) {
        params["beta"] = to_string(*curve.params.beta);
    } else {
        params["t"] = to_string(*curve.params.t);
    }
    j["params"] = params;
    j["lambda"] = to_string(curve.lambda);
    j["A"] = poly_to_json(curve.A);
    j["f"] = poly_to_json(curve.f);
    j["f_int"] = poly_to_json(curve.f_int);
    j["scale_c"] = to_string(curve.scale_c);
    // Point order: P0, P0', P1, P1'.
    j["marked_points"] = Json::array({point_to_json(curve.P0), point_to_json(curve.P0p),
                                      point_to_json(curve.P1), point_to_json(curve.P1p)});
    if (include_integral_points) {
        j["marked_points_integral"] =
            Json::array({point_to_json(integral_point(curve, curve.P0)),
                         point_to_json(integral_point(curve, curve.P0p)),
                         point_to_json(integral_point(curve, curve.P1)),
                         point_to_json(integral_point(curve, curve.P1p))});
    }
    return j;
}

CurveModel curve_model_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("curve file must hold a JSON object");
    if (!j.contains("family") || !j.contains("g")) {
        throw ParseError("curve file needs 'family' and 'g'");
    }
    const Family family = family_from_string(j.at("family").get<std::string>());
    const int g = j.at("g").get<int>();

    std::optional<Rational> t, beta;
    if (j.contains("params") && j.at("params").is_object()) {
        const Json& params = j.at("params");
        if (family == Family::GenericT || family == Family::Cor43) {
            if (!params.contains("t")) throw ParseError("curve file needs params.t");
            t = rational_from_json_value(params.at("t"));
        } else if (family == Family::Thm41) {
            if (!params.contains("beta")) throw ParseError("curve file needs params.beta");
            beta = rational_from_json_value(params.at("beta"));
        }
    } else if (family == Family::GenericT || family == Family::Cor43 ||
               family == Family::Thm41) {
        throw ParseError("curve file needs a params object");
    }

    CurveModel curve;
    try {
        curve = build_family(make_params(family, g, t, beta));
    } catch (const Error& e) {
        throw ParseError(std::string("curve file parameters are invalid: ") + e.what());
    }
    if (j.contains("f_int") && poly_from_json(j.at("f_int")) != curve.f_int) {
        throw ParseError("stored integral model disagrees with the reconstruction");
    }
    return curve;
}

Json certificate_to_json(const TorsionCertificate& cert) {
    Json j;
    j["curve_fingerprint"] = cert.curve_fingerprint;
    j["point"] = point_to_json(cert.point);
    j["claimed_order"] = to_string(cert.claimed_order);
    Json factorization = Json::array();
    for (const auto& [p, e] : cert.factorization) {
        factorization.push_back(Json::array({to_string(p), e}));
    }
    j["factorization"] = factorization;
    Json checks = Json::array();
    for (const auto& check : cert.checks) {
        Json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        checks.push_back(c);
    }
    j["checks"] = checks;
    if (cert.relation_checks) {
        j["relation_checks"] = Json::array(
            {cert.relation_checks->first, cert.relation_checks->second});
    } else {
        j["relation_checks"] = nullptr;
    }
    if (cert.l_certificate) {
        Json lc;
        lc["L_P1p"] = to_string(cert.l_certificate->L_P1p);
        lc["L_P0p"] = to_string(cert.l_certificate->L_P0p);
        lc["identity_pass"] = cert.l_certificate->identity_pass;
        j["l_certificate"] = lc;
    } else {
        j["l_certificate"] = nullptr;
    }
    Json modp = Json::array();
    for (const auto& conf : cert.modp) {
        modp.push_back(Json::array({conf.p, to_string(conf.order)}));
    }
    j["modp"] = modp;
    j["valid"] = cert.valid;
    return j;
}

AffinePoint parse_point(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ParseError("projective point must be x:y:z");
        const Rational z = rational_from_string(parts[2]);
        if (z == 0) throw PointAtInfinity("the point at infinity is not an affine point");
        if (z != 1) throw ParseError("projective points must be normalized to z = 1");
        return {rational_from_string(parts[0]), rational_from_string(parts[1])};
    }
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw ParseError("affine point must be x,y");
    return {rational_from_string(parts[0]), rational_from_string(parts[1])};
}

AffinePoint integral_point(const CurveModel& curve, const AffinePoint& point) {
    return {point.x, curve.scale_c * point.y};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torsionforge
