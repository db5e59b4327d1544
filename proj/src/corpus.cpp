#include "torsionforge/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "torsionforge/modp.hpp"

namespace torsionforge {

namespace {

CorpusEntry entry_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("corpus entry must be an object");
    for (const char* key : {"name", "source", "genus", "f_int", "point", "claimed_order"}) {
        if (!j.contains(key)) {
            throw ParseError(std::string("corpus entry is missing '") + key + "'");
        }
    }
    CorpusEntry entry;
    entry.name = j.at("name").get<std::string>();
    entry.source = j.at("source").get<std::string>();
    entry.genus = j.at("genus").get<int>();
    entry.f_int = poly_from_json(j.at("f_int"));
    entry.point = point_from_json(j.at("point"));
    const Json& order = j.at("claimed_order");
    if (order.is_string()) {
        entry.claimed_order = integer_from_string(order.get<std::string>());
    } else if (order.is_number_integer()) {
        entry.claimed_order = Integer(static_cast<long>(order.get<long long>()));
    } else {
        throw ParseError("claimed_order must be an integer");
    }

    if (entry.genus < 1) throw ParseError("corpus entry genus must be >= 1");
    if (entry.f_int.degree() != 2 * entry.genus + 1) {
        throw ParseError("corpus entry '" + entry.name + "': deg f_int != 2g+1");
    }
    if (entry.claimed_order < 1) {
        throw ParseError("corpus entry '" + entry.name + "': claimed_order must be >= 1");
    }
    if (entry.point.y * entry.point.y != entry.f_int(entry.point.x)) {
        throw ParseError("corpus entry '" + entry.name + "': point is not on the curve");
    }

    if (j.contains("family")) {
        const Json& fam = j.at("family");
        if (!fam.is_object() || !fam.contains("family") || !fam.contains("g")) {
            throw ParseError("corpus entry family block needs 'family' and 'g'");
        }
        const Family family = family_from_string(fam.at("family").get<std::string>());
        std::optional<Rational> t, beta;
        if (fam.contains("t")) t = rational_from_string(fam.at("t").get<std::string>());
        if (fam.contains("beta")) beta = rational_from_string(fam.at("beta").get<std::string>());
        try {
            entry.family_params = make_params(family, fam.at("g").get<int>(), t, beta);
        } catch (const Error& e) {
            throw ParseError("corpus entry '" + entry.name + "': " + e.what());
        }
    }
    return entry;
}

CorpusResult run_one(const CorpusEntry& entry, int modp_count) {
    CorpusResult result;
    result.name = entry.name;
    result.claimed_order = entry.claimed_order;

    const auto jac = make_jacobian_curve(entry.f_int, entry.genus);
    const std::string fingerprint = curve_fingerprint(entry.f_int);
    result.certificate =
        certify_exact_order(jac, entry.point, entry.claimed_order, fingerprint);

    MumfordDivisor<Rational> D = divisor_from_point(jac, entry.point.x, entry.point.y);
    if (!is_zero(scalar_mul(jac, entry.claimed_order, D))) D = negate(jac, D);
    try {
        result.computed_order = order_of_class(jac, D, entry.claimed_order);
    } catch (const NotAMultiple&) {
        result.computed_order = std::nullopt;
    }

    if (entry.family_params) {
        const CurveModel model = build_family(*entry.family_params);
        result.family_match = (model.f_int == entry.f_int);
    }

    bool modp_ok = true;
    if (modp_count > 0) {
        const auto primes = select_good_primes(entry.f_int, entry.claimed_order, modp_count);
        result.certificate.modp =
            cross_check(entry.f_int, entry.genus, entry.point, entry.claimed_order, primes);
        for (const auto& conf : result.certificate.modp) modp_ok = modp_ok && conf.agree;
    }

    result.ok = result.certificate.valid && modp_ok &&
                (!result.family_match || *result.family_match);
    return result;
}

}  // namespace

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("corpus file must hold a JSON array");
    std::vector<CorpusEntry> entries;
    entries.reserve(j.size());
    for (const auto& item : j) entries.push_back(entry_from_json(item));
    return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("corpus file is not valid JSON: ") + e.what());
    }
    return corpus_from_json(j);
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     int modp_count, int jobs) {
    std::vector<CorpusResult> results(entries.size());
    if (entries.empty()) return results;
    if (jobs < 1) jobs = 1;

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
            try {
                results[i] = run_one(entries[i], modp_count);
            } catch (const std::exception& e) {
                results[i].name = entries[i].name;
                results[i].claimed_order = entries[i].claimed_order;
                results[i].certificate.checks.push_back(
                    {std::string("error: ") + e.what(), false});
                results[i].ok = false;
            }
        }
    };

    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), entries.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

Json corpus_result_to_json(const CorpusResult& result) {
    Json j;
    j["name"] = result.name;
    j["claimed_order"] = to_string(result.claimed_order);
    if (result.computed_order) {
        j["computed_order"] = to_string(*result.computed_order);
    } else {
        j["computed_order"] = nullptr;
    }
    if (result.family_match) {
        j["family_match"] = *result.family_match;
    } else {
        j["family_match"] = nullptr;
    }
    j["certificate"] = certificate_to_json(result.certificate);
    j["ok"] = result.ok;
    return j;
}

}  // namespace torsionforge
