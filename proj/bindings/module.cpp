#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionforge/corpus.hpp"
#include "torsionforge/modp.hpp"
#include "torsionforge/version.hpp"

namespace py = pybind11;

namespace {

using namespace torsionforge;

// Every rational crosses the boundary as a canonical decimal string; JSON
// documents cross as their canonical dump. The Python package parses them.

FamilyParams params_from(const std::string& family, int g,
                         const std::optional<std::string>& t,
                         const std::optional<std::string>& beta) {
    std::optional<Rational> t_value, beta_value;
    if (t) t_value = rational_from_string(*t);
    if (beta) beta_value = rational_from_string(*beta);
    return make_params(family_from_string(family), g, t_value, beta_value);
}

Polynomial<Rational> poly_from(const std::vector<std::string>& coeffs) {
    std::vector<Rational> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) values.push_back(rational_from_string(c));
    return Polynomial<Rational>::from_coefficients(std::move(values));
}

std::string build_family_json(const std::string& family, int g,
                              const std::optional<std::string>& t,
                              const std::optional<std::string>& beta, bool integral) {
    const CurveModel model = build_family(params_from(family, g, t, beta));
    return dump_json(curve_model_to_json(model, integral));
}

py::dict expected_orders_dict(const std::string& family, int g,
                              const std::optional<std::string>& t,
                              const std::optional<std::string>& beta) {
    const ExpectedOrders eo = expected_orders(params_from(family, g, t, beta));
    py::dict out;
    out["bound"] = eo.bound;
    if (eo.exact_N) {
        out["exact_N"] = *eo.exact_N;
    } else {
        out["exact_N"] = py::none();
    }
    out["relation_matrix"] =
        py::make_tuple(py::make_tuple(eo.relation_matrix[0][0], eo.relation_matrix[0][1]),
                       py::make_tuple(eo.relation_matrix[1][0], eo.relation_matrix[1][1]));
    return out;
}

py::dict phi_decomposition_dict(const std::string& family, int g,
                                const std::optional<std::string>& t,
                                const std::optional<std::string>& beta) {
    const CurveModel model = build_family(params_from(family, g, t, beta));
    const PhiDecomposition phi = phi_decomposition(model);
    const auto coeffs = [](const Polynomial<Rational>& poly) {
        std::vector<std::string> out;
        for (int i = 0; i <= poly.degree(); ++i) out.push_back(to_string(poly.coeff(i)));
        return out;
    };
    py::dict out;
    out["a"] = coeffs(phi.a);
    out["b"] = coeffs(phi.b);
    out["p"] = coeffs(phi.p);
    out["q"] = coeffs(phi.q);
    out["h"] = coeffs(phi.h);
    return out;
}

AffinePoint marked_point(const CurveModel& model, const std::string& marked) {
    if (marked == "d0") return model.P0;
    if (marked == "d1") return model.P1;
    throw InvalidParams("marked must be 'd0' or 'd1', got '" + marked + "'");
}

std::string certify_marked_json(const std::string& family, int g,
                                const std::optional<std::string>& t,
                                const std::optional<std::string>& beta,
                                const std::string& marked, const std::string& order,
                                bool relations, bool l_cert, int modp) {
    const CurveModel model = build_family(params_from(family, g, t, beta));
    const Integer N = integer_from_string(order);
    const AffinePoint point = marked_point(model, marked);
    const auto jac = make_jacobian_curve(model.f, model.genus());
    TorsionCertificate cert =
        certify_exact_order(jac, point, N, curve_fingerprint(model.f_int));
    if (relations) cert.relation_checks = verify_relation_matrix(model);
    if (l_cert) cert.l_certificate = evaluate_L_certificate(model);
    if (modp > 0) {
        const auto primes = select_good_primes(model, N, modp);
        const AffinePoint p_int = integral_point(model, point);
        cert.modp = cross_check(model.f_int, model.genus(), p_int, N, primes);
    }
    return dump_json(certificate_to_json(cert));
}

std::string certify_point_json(const std::vector<std::string>& f_int, int genus,
                               const std::string& x, const std::string& y,
                               const std::string& order) {
    const Polynomial<Rational> f = poly_from(f_int);
    const auto jac = make_jacobian_curve(f, genus);
    const AffinePoint point{rational_from_string(x), rational_from_string(y)};
    const TorsionCertificate cert =
        certify_exact_order(jac, point, integer_from_string(order), curve_fingerprint(f));
    return dump_json(certificate_to_json(cert));
}

std::string order_of_point_str(const std::vector<std::string>& f_int, int genus,
                               const std::string& x, const std::string& y,
                               const std::string& multiple) {
    const Polynomial<Rational> f = poly_from(f_int);
    const auto jac = make_jacobian_curve(f, genus);
    const auto D = divisor_from_point(jac, rational_from_string(x), rational_from_string(y));
    return to_string(order_of_class(jac, D, integer_from_string(multiple)));
}

std::pair<bool, bool> relation_checks_pair(const std::string& family, int g,
                                           const std::optional<std::string>& t,
                                           const std::optional<std::string>& beta) {
    return verify_relation_matrix(build_family(params_from(family, g, t, beta)));
}

py::dict l_certificate_dict(const std::string& family, int g) {
    const LCertificate lc =
        evaluate_L_certificate(build_family(params_from(family, g, std::nullopt, std::nullopt)));
    py::dict out;
    out["L_P1p"] = to_string(lc.L_P1p);
    out["L_P0p"] = to_string(lc.L_P0p);
    out["closed_P1p"] = to_string(lc.closed_P1p);
    out["closed_P0p"] = to_string(lc.closed_P0p);
    out["closed_P1p_pass"] = lc.closed_P1p_pass;
    out["closed_P0p_pass"] = lc.closed_P0p_pass;
    out["identity_pass"] = lc.identity_pass;
    out["coprimality_pass"] = lc.coprimality_pass;
    return out;
}

py::tuple companion_tuple(const std::string& family, int g,
                          const std::optional<std::string>& t,
                          const std::optional<std::string>& beta, const std::string& marked,
                          const std::string& order) {
    const CurveModel model = build_family(params_from(family, g, t, beta));
    const auto [point, N] =
        derived_companion_order(model, marked_point(model, marked),
                                integer_from_string(order), curve_fingerprint(model.f_int));
    return py::make_tuple(py::make_tuple(to_string(point.x), to_string(point.y)), to_string(N));
}

std::vector<std::uint64_t> good_primes(const std::vector<std::string>& f_int,
                                       const std::string& order, int count) {
    return select_good_primes(poly_from(f_int), integer_from_string(order), count);
}

std::vector<py::tuple> cross_check_list(const std::vector<std::string>& f_int, int genus,
                                        const std::string& x, const std::string& y,
                                        const std::string& order,
                                        const std::vector<std::uint64_t>& primes) {
    const AffinePoint point{rational_from_string(x), rational_from_string(y)};
    std::vector<py::tuple> out;
    for (const auto& conf :
         cross_check(poly_from(f_int), genus, point, integer_from_string(order), primes)) {
        out.push_back(py::make_tuple(conf.p, to_string(conf.order), conf.agree));
    }
    return out;
}

std::vector<std::string> run_corpus_json(const std::string& path, int modp, int jobs) {
    std::vector<std::string> out;
    for (const auto& result : run_corpus(load_corpus(path), modp, jobs)) {
        out.push_back(corpus_result_to_json(result).dump());
    }
    return out;
}

std::vector<std::string> integralize_coeffs(const std::vector<std::string>& f) {
    const Integralization result = integralize(poly_from(f));
    std::vector<std::string> out;
    out.push_back(to_string(result.c));
    for (int i = 0; i <= result.g.degree(); ++i) out.push_back(to_string(result.g.coeff(i)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_torsionforge, m) {
    m.doc() = "Exact torsion-order certificates on hyperelliptic Jacobians";

    py::register_exception<Error>(m, "Error");

    m.def("version", [] { return std::string(kVersion); });
    m.def("name", [] { return std::string(kName); });

    m.def("build_family", &build_family_json, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(),
          py::arg("integral") = false,
          "Construct a family member; returns the curve model as a JSON document.");

    m.def("expected_orders", &expected_orders_dict, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(),
          "Divisibility bound, advertised exact order, and relation matrix.");

    m.def("phi_decomposition", &phi_decomposition_dict, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(),
          "The decomposition behind the second relation row (ascending coefficients).");

    m.def("certify_marked", &certify_marked_json, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(), py::arg("marked") = "d0",
          py::arg("order") = "1", py::arg("relations") = false, py::arg("l_cert") = false,
          py::arg("modp") = 0,
          "Certify the exact order of a marked class; returns the certificate JSON.");

    m.def("certify_point", &certify_point_json, py::arg("f_int"), py::arg("genus"),
          py::arg("x"), py::arg("y"), py::arg("order"),
          "Certify the exact order of [P - infinity] on y^2 = f_int(x).");

    m.def("order_of_point", &order_of_point_str, py::arg("f_int"), py::arg("genus"),
          py::arg("x"), py::arg("y"), py::arg("multiple"),
          "Exact order of [P - infinity] given an annihilating multiple.");

    m.def("relation_checks", &relation_checks_pair, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(),
          "Evaluate both relation-matrix rows on the marked classes.");

    m.def("l_certificate", &l_certificate_dict, py::arg("family"), py::arg("g"),
          "Evaluated L-values against the tabulated closed forms.");

    m.def("derived_companion_order", &companion_tuple, py::arg("family"), py::arg("g"),
          py::arg("t") = py::none(), py::arg("beta") = py::none(), py::arg("marked") = "d0",
          py::arg("order") = "1",
          "Predict and verify the companion marked class's order; ((x, y), order).");

    m.def("select_good_primes", &good_primes, py::arg("f_int"), py::arg("order"),
          py::arg("count"), "Smallest odd primes of good reduction prime to the order.");

    m.def("cross_check", &cross_check_list, py::arg("f_int"), py::arg("genus"), py::arg("x"),
          py::arg("y"), py::arg("order"), py::arg("primes"),
          "Order of the reduced class at each prime; [(p, order, agree)].");

    m.def("run_corpus", &run_corpus_json, py::arg("path"), py::arg("modp") = 0,
          py::arg("jobs") = 1, "Certify every corpus entry; one JSON document per entry.");

    m.def("integralize", &integralize_coeffs, py::arg("f"),
          "Minimal c with c^2*f integral and primitive; [c, coefficients...].");
}
