#include "norm0/report.hpp"

#include <sstream>

#include <json.hpp>

#include "norm0/errors.hpp"

namespace norm0 {

using ojson = nlohmann::ordered_json;

Report build_report(const QuotientGroup& g) {
    const Level n = g.level();
    Report r;
    r.n = n;
    const SqfDecomp sq = squarefree_decompose(n);
    r.sigma = sq.sigma;
    r.q = sq.q;
    r.v = v_params(n).v;
    r.epsilon = epsilon(n);
    r.order = g.order();
    for (const auto& gen : g.generators().generators) r.generators.push_back(gen.name);

    const StructureVerification sv = verify_structure(g, ClaimSource::Barsfi);
    r.structure_ok = sv.ok();
    for (const auto& f : sv.factors) {
        FactorEntry fe{f.descriptor.prime, f.descriptor.case_label, f.descriptor.generators,
                       f.descriptor.claimed_order, f.subgroup_order, {}};
        for (const auto& rel : f.relations) fe.relations.push_back({rel.text, rel.expected, rel.holds});
        r.factors.push_back(std::move(fe));
    }

    const ClaimVerdict cv = check_claim_al(g);
    r.claim_al = {cv.holds, cv.stage, {}, cv.message};
    if (!cv.witness_a.empty()) r.claim_al.witness.push_back(cv.witness_a);
    if (!cv.witness_b.empty()) r.claim_al.witness.push_back(cv.witness_b);

    const BarsDecomposer bars(g);
    for (std::size_t i = 0; i < g.order() && i < kBarsSamples; ++i) {
        const BarsDecomposition d = bars.decompose(i);
        r.bars_samples.push_back({i, format_word(g.word(i)), d.m, format_word(d.omega)});
    }

    const auto& gens = g.generators().generators;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            r.commutation.push_back(
                {gens[a].name, gens[b].name, commutes(g, g.generator_element(a), g.generator_element(b))});
    return r;
}

namespace {

ojson to_ojson(const Report& r) {
    ojson j;
    j["schema"] = r.schema;
    j["N"] = r.n;
    j["sigma"] = r.sigma;
    j["q"] = r.q;
    j["v"] = r.v;
    j["epsilon"] = r.epsilon;
    j["order"] = r.order;
    j["generators"] = r.generators;
    j["structure_ok"] = r.structure_ok;
    j["factors"] = ojson::array();
    for (const auto& f : r.factors) {
        ojson fj;
        fj["prime"] = f.prime;
        fj["case"] = f.case_label;
        fj["generators"] = f.generators;
        fj["claimed_order"] = f.claimed_order ? ojson(*f.claimed_order) : ojson(nullptr);
        fj["subgroup_order"] = f.subgroup_order;
        fj["relations"] = ojson::array();
        for (const auto& rel : f.relations)
            fj["relations"].push_back({{"word", rel.word}, {"expected", rel.expected}, {"holds", rel.holds}});
        j["factors"].push_back(std::move(fj));
    }
    j["claim_AL"] = {{"holds", r.claim_al.holds},
                     {"stage", r.claim_al.stage},
                     {"witness", r.claim_al.witness},
                     {"message", r.claim_al.message}};
    j["bars_samples"] = ojson::array();
    for (const auto& s : r.bars_samples)
        j["bars_samples"].push_back({{"element", s.element}, {"word", s.word}, {"m", s.m}, {"omega", s.omega}});
    j["commutation"] = ojson::array();
    for (const auto& c : r.commutation)
        j["commutation"].push_back({{"a", c.a}, {"b", c.b}, {"commute", c.commute}});
    j["timing_ms"] = r.timing_ms ? ojson(*r.timing_ms) : ojson(nullptr);
    return j;
}

} // namespace

std::string report_to_json(const Report& r, int indent) { return to_ojson(r).dump(indent); }

Report report_from_json(const std::string& text) {
    try {
        const ojson j = ojson::parse(text);
        Report r;
        r.schema = j.at("schema").get<std::string>();
        if (r.schema != kReportSchema) throw Error(ErrorCode::ParseError, "unexpected report schema " + r.schema);
        r.n = j.at("N").get<std::uint64_t>();
        r.sigma = j.at("sigma").get<std::uint64_t>();
        r.q = j.at("q").get<std::uint64_t>();
        r.v = j.at("v").get<std::uint64_t>();
        r.epsilon = j.at("epsilon").get<std::uint64_t>();
        r.order = j.at("order").get<std::uint64_t>();
        r.generators = j.at("generators").get<std::vector<std::string>>();
        r.structure_ok = j.at("structure_ok").get<bool>();
        for (const auto& fj : j.at("factors")) {
            FactorEntry f{fj.at("prime").get<std::uint64_t>(), fj.at("case").get<std::string>(),
                          fj.at("generators").get<std::vector<std::string>>(), std::nullopt,
                          fj.at("subgroup_order").get<std::uint64_t>(), {}};
            if (!fj.at("claimed_order").is_null()) f.claimed_order = fj.at("claimed_order").get<std::uint64_t>();
            for (const auto& rj : fj.at("relations"))
                f.relations.push_back(
                    {rj.at("word").get<std::string>(), rj.at("expected").get<bool>(), rj.at("holds").get<bool>()});
            r.factors.push_back(std::move(f));
        }
        const auto& cj = j.at("claim_AL");
        r.claim_al = {cj.at("holds").get<bool>(), cj.at("stage").get<std::string>(),
                      cj.at("witness").get<std::vector<std::string>>(), cj.at("message").get<std::string>()};
        for (const auto& sj : j.at("bars_samples"))
            r.bars_samples.push_back({sj.at("element").get<std::uint64_t>(), sj.at("word").get<std::string>(),
                                      sj.at("m").get<std::uint64_t>(), sj.at("omega").get<std::string>()});
        for (const auto& c : j.at("commutation"))
            r.commutation.push_back({c.at("a").get<std::string>(), c.at("b").get<std::string>(),
                                     c.at("commute").get<bool>()});
        if (!j.at("timing_ms").is_null()) r.timing_ms = j.at("timing_ms").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "N = " << r.n << "\n";
    os << "sigma = " << r.sigma << ", q = " << r.q << ", epsilon = " << r.epsilon << ", v = " << r.v << "\n";
    os << "generators:";
    for (const auto& g : r.generators) os << ' ' << g;
    os << "\nquotient order: " << r.order << "\n";
    os << "corrected structure: " << (r.structure_ok ? "verified" : "MISMATCH") << "\n";
    for (const auto& f : r.factors) {
        os << "  p=" << f.prime << " " << f.case_label << " <";
        for (std::size_t i = 0; i < f.generators.size(); ++i) os << (i ? "," : "") << f.generators[i];
        os << "> order " << f.subgroup_order;
        if (f.claimed_order) os << " (stated " << *f.claimed_order << ")";
        os << "\n";
        for (const auto& rel : f.relations)
            os << "    " << (rel.holds == rel.expected ? "ok  " : "FAIL") << " " << rel.word
               << (rel.expected ? " = 1" : " != 1") << "\n";
    }
    os << "commutation:";
    for (const auto& c : r.commutation) os << ' ' << c.a << (c.commute ? "~" : "/") << c.b;
    os << "\nclaim_AL: " << (r.claim_al.holds ? "true" : "false");
    if (!r.claim_al.holds) {
        os << " [" << r.claim_al.stage << "]";
        if (!r.claim_al.witness.empty()) {
            os << " witness (";
            for (std::size_t i = 0; i < r.claim_al.witness.size(); ++i) os << (i ? ", " : "") << r.claim_al.witness[i];
            os << ")";
        }
        os << ": " << r.claim_al.message;
    }
    os << "\n";
    if (r.timing_ms) os << "time: " << *r.timing_ms << " ms\n";
    return os.str();
}

} // namespace norm0
