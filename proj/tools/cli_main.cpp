#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "torsionforge/corpus.hpp"
#include "torsionforge/modp.hpp"
#include "torsionforge/serialization.hpp"
#include "torsionforge/torsion.hpp"
#include "torsionforge/version.hpp"

namespace tf = torsionforge;

namespace {

struct FamilyArgs {
    std::string family;
    int g = 0;
    std::string t;
    std::string beta;
};

tf::CurveModel build_from_args(const FamilyArgs& args) {
    std::optional<tf::Rational> t, beta;
    if (!args.t.empty()) t = tf::rational_from_string(args.t);
    if (!args.beta.empty()) beta = tf::rational_from_string(args.beta);
    return tf::build_family(
        tf::make_params(tf::family_from_string(args.family), args.g, t, beta));
}

tf::CurveModel load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tf::ParseError("cannot open curve file '" + path + "'");
    tf::Json j;
    try {
        j = tf::Json::parse(in);
    } catch (const tf::Json::parse_error& e) {
        throw tf::ParseError(std::string("curve file is not valid JSON: ") + e.what());
    }
    return tf::curve_model_from_json(j);
}

int resolve_jobs(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TORSION_FORGE_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int cmd_family(const FamilyArgs& args, bool integral) {
    const tf::CurveModel curve = build_from_args(args);
    std::cout << tf::dump_json(tf::curve_model_to_json(curve, integral));
    return 0;
}

struct CertifyArgs {
    std::string curve_file;
    FamilyArgs family;
    std::string point;
    std::string marked;
    std::string order;
    int modp = 0;
    bool relations = false;
    bool l_cert = false;
};

int cmd_certify(const CertifyArgs& args) {
    const bool inline_family = !args.family.family.empty();
    if (args.curve_file.empty() == !inline_family) {
        throw tf::ParseError("give exactly one of --curve or --family");
    }
    if (args.point.empty() == args.marked.empty()) {
        throw tf::ParseError("give exactly one of --point or --marked");
    }
    const tf::CurveModel curve =
        inline_family ? build_from_args(args.family) : load_curve_file(args.curve_file);
    const tf::Integer N = tf::integer_from_string(args.order);
    const std::string fingerprint = tf::curve_fingerprint(curve.f_int);
    const int g = curve.params.g;

    tf::TorsionCertificate cert;
    tf::AffinePoint integral_pt;
    if (!args.marked.empty()) {
        tf::AffinePoint pt;
        if (args.marked == "d0") {
            pt = curve.P0;
        } else if (args.marked == "d1") {
            pt = curve.P1;
        } else {
            throw tf::ParseError("--marked must be d0 or d1");
        }
        const auto jac = tf::make_jacobian_curve(curve.f, g);
        cert = tf::certify_exact_order(jac, pt, N, fingerprint);
        integral_pt = tf::integral_point(curve, pt);
    } else {
        const tf::AffinePoint pt = tf::parse_point(args.point);
        const auto jac = tf::make_jacobian_curve(curve.f_int, g);
        cert = tf::certify_exact_order(jac, pt, N, fingerprint);
        integral_pt = pt;
    }

    if (args.relations) cert.relation_checks = tf::verify_relation_matrix(curve);
    if (args.l_cert) cert.l_certificate = tf::evaluate_L_certificate(curve);
    if (args.modp > 0) {
        const auto primes = tf::select_good_primes(curve.f_int, N, args.modp);
        cert.modp = tf::cross_check(curve.f_int, g, integral_pt, N, primes);
    }

    std::cout << tf::dump_json(tf::certificate_to_json(cert));
    return cert.valid ? 0 : 1;
}

int cmd_corpus(const std::string& path, int modp, int jobs) {
    const auto entries = tf::load_corpus(path);
    const auto results = tf::run_corpus(entries, modp, resolve_jobs(jobs));

    bool all_ok = true;
    for (const auto& result : results) {
        std::cout << tf::corpus_result_to_json(result).dump() << "\n";
        all_ok = all_ok && result.ok;
    }

    std::printf("%-16s %10s %10s %8s\n", "name", "claimed", "computed", "status");
    for (const auto& result : results) {
        const std::string computed =
            result.computed_order ? tf::to_string(*result.computed_order) : "-";
        std::printf("%-16s %10s %10s %8s\n", result.name.c_str(),
                    tf::to_string(result.claimed_order).c_str(), computed.c_str(),
                    result.ok ? "ok" : "FAIL");
    }
    return all_ok ? 0 : 1;
}

int cmd_relations(const FamilyArgs& args) {
    const tf::CurveModel curve = build_from_args(args);
    const tf::ExpectedOrders expected = tf::expected_orders(curve.params);
    const auto [row1, row2] = tf::verify_relation_matrix(curve);

    tf::Json j;
    j["family"] = tf::family_name(curve.params.family);
    j["g"] = curve.params.g;
    j["relation_matrix"] = tf::Json::array(
        {tf::Json::array({expected.relation_matrix[0][0], expected.relation_matrix[0][1]}),
         tf::Json::array({expected.relation_matrix[1][0], expected.relation_matrix[1][1]})});
    j["bound"] = expected.bound;
    const long det = expected.relation_matrix[0][0] * expected.relation_matrix[1][1] -
                     expected.relation_matrix[0][1] * expected.relation_matrix[1][0];
    j["det"] = det;
    if (expected.exact_N) {
        j["exact_N"] = *expected.exact_N;
    } else {
        j["exact_N"] = nullptr;
    }
    j["row_checks"] = tf::Json::array({row1, row2});
    std::cout << tf::dump_json(j);
    return (row1 && row2) ? 0 : 1;
}

int cmd_version() {
    tf::Json j;
    j["name"] = tf::kName;
    j["version"] = tf::kVersion;
    std::cout << tf::dump_json(j);
    return 0;
}

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool required) {
    cmd->add_option("--family", args.family, "family id: thmA, thmB, genericT, thm41, cor43")
        ->required(required);
    cmd->add_option("--g", args.g, "genus (>= 2)")->required(required);
    cmd->add_option("--t", args.t, "parameter t (genericT, cor43)");
    cmd->add_option("--beta", args.beta, "parameter beta (thm41)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion-order certificates for hyperelliptic Jacobians over Q"};
    app.require_subcommand(1);

    FamilyArgs family_args;
    bool integral = false;
    bool json_flag = true;
    CLI::App* family = app.add_subcommand("family", "construct a curve and print its model");
    add_family_options(family, family_args, true);
    family->add_flag("--integral", integral, "include marked points on the integral model");
    family->add_flag("--json", json_flag, "emit JSON (the default and only format)");

    CertifyArgs certify_args;
    CLI::App* certify =
        app.add_subcommand("certify", "certify the exact order of a divisor class");
    certify->add_option("--curve", certify_args.curve_file, "curve model JSON file");
    add_family_options(certify, certify_args.family, false);
    certify->add_option("--point", certify_args.point,
                        "point 'x,y' or 'x:y:1' on the integral model");
    certify->add_option("--marked", certify_args.marked, "marked point: d0 or d1");
    certify->add_option("--order", certify_args.order, "claimed exact order N")->required();
    certify->add_option("--modp", certify_args.modp, "confirm at this many good primes");
    certify->add_flag("--relations", certify_args.relations, "include relation-matrix checks");
    certify->add_flag("--l-cert", certify_args.l_cert, "include the L-evaluation record");

    std::string corpus_file;
    int corpus_modp = 0;
    int corpus_jobs = 0;
    CLI::App* corpus = app.add_subcommand("corpus", "run a regression corpus");
    corpus->add_option("file", corpus_file, "corpus JSON file")->required();
    corpus->add_option("--modp", corpus_modp, "confirm each entry at this many good primes");
    corpus->add_option("--jobs", corpus_jobs,
                       "worker threads (default: TORSION_FORGE_JOBS or all cores)");

    FamilyArgs relations_args;
    CLI::App* relations =
        app.add_subcommand("relations", "check the relation matrix for a family instance");
    add_family_options(relations, relations_args, true);

    CLI::App* version = app.add_subcommand("version", "print name and version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(family)) return cmd_family(family_args, integral);
        if (app.got_subcommand(certify)) return cmd_certify(certify_args);
        if (app.got_subcommand(corpus)) return cmd_corpus(corpus_file, corpus_modp, corpus_jobs);
        if (app.got_subcommand(relations)) return cmd_relations(relations_args);
        if (app.got_subcommand(version)) return cmd_version();
    } catch (const tf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
