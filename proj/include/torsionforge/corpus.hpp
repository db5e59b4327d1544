#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionforge/serialization.hpp"
#include "torsionforge/torsion.hpp"

namespace torsionforge {

// One regression entry: a recorded curve, a rational point on its integral
// model, and the recorded exact order of [P - infinity]. Entries that came
// from a parametric construction also carry the parameters so the runner can
// rebuild the curve and compare coefficients.
struct CorpusEntry {
    std::string name;
    std::string source;
    int genus = 0;
    Polynomial<Rational> f_int;
    AffinePoint point;
    Integer claimed_order;
    std::optional<FamilyParams> family_params;
};

std::vector<CorpusEntry> corpus_from_json(const Json& j);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusResult {
    std::string name;
    Integer claimed_order;
    std::optional<Integer> computed_order;
    TorsionCertificate certificate;
    std::optional<bool> family_match;
    bool ok = false;
};

// Certify every entry (claimed order, optional family reconstruction,
// optional mod-p confirmations). Entries run concurrently on up to `jobs`
// threads; results come back in corpus order.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                     int modp_count, int jobs);

Json corpus_result_to_json(const CorpusResult& result);

}  // namespace torsionforge
