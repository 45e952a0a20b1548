#include "norm0/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "norm0/errors.hpp"

namespace norm0 {

using ojson = nlohmann::ordered_json;

namespace {

ojson matrix_json(const ProjectiveMatrix& p) {
    return ojson::array({p.a().get_str(), p.b().get_str(), p.c().get_str(), p.d().get_str()});
}

ProjectiveMatrix matrix_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "matrix must have four entries");
    Mat2 m;
    Int* slots[4] = {&m.a, &m.b, &m.c, &m.d};
    for (std::size_t i = 0; i < 4; ++i)
        if (slots[i]->set_str(j[i].get<std::string>(), 10) != 0)
            throw Error(ErrorCode::ParseError, "bad matrix entry");
    ProjectiveMatrix p = canonicalize(m);
    if (!(p.mat() == m)) throw Error(ErrorCode::ParseError, "matrix is not in canonical form");
    return p;
}

} // namespace

std::string group_to_cache_json(const QuotientGroup& g) {
    const auto& parts = g.parts();
    ojson j;
    j["schema"] = kCacheSchema;
    j["N"] = g.level();
    j["generators"] = ojson::array();
    for (const auto& gen : parts.gens.generators)
        j["generators"].push_back({{"name", gen.name}, {"matrix", matrix_json(gen.matrix)}});
    j["elements"] = ojson::array();
    for (const auto& rep : parts.reps) j["elements"].push_back(matrix_json(rep));
    j["parent"] = parts.parent;
    j["last_gen"] = parts.last_gen;
    j["right_mul"] = parts.right_mul;
    j["table"] = ojson::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        ojson row = ojson::array();
        for (std::size_t k = 0; k < g.order(); ++k) row.push_back(g.op(i, k));
        j["table"].push_back(std::move(row));
    }
    return j.dump();
}

QuotientGroup group_from_cache_json(const std::string& text, Level expected_level, std::uint64_t factor_cap) {
    try {
        const ojson j = ojson::parse(text);
        if (j.at("schema").get<std::string>() != kCacheSchema) throw Error(ErrorCode::ParseError, "cache schema");
        if (j.at("N").get<Level>() != expected_level) throw Error(ErrorCode::ParseError, "cache level");

        QuotientGroup::Parts parts;
        parts.gens = canonical_generators(expected_level, factor_cap);
        const auto& gj = j.at("generators");
        if (gj.size() != parts.gens.size()) throw Error(ErrorCode::ParseError, "generator count");
        for (std::size_t k = 0; k < gj.size(); ++k)
            if (gj[k].at("name").get<std::string>() != parts.gens.generators[k].name ||
                !(matrix_from_json(gj[k].at("matrix")) == parts.gens.generators[k].matrix))
                throw Error(ErrorCode::ParseError, "generator mismatch");
        for (const auto& e : j.at("elements")) parts.reps.push_back(matrix_from_json(e));
        parts.parent = j.at("parent").get<std::vector<std::size_t>>();
        parts.last_gen = j.at("last_gen").get<std::vector<std::size_t>>();
        parts.right_mul = j.at("right_mul").get<std::vector<std::size_t>>();

        QuotientGroup g(std::move(parts));
        const auto& gens = g.generators().generators;
        for (std::size_t i = 0; i < g.order(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (!coset_equal(product(g.element(i).rep, gens[k].matrix), g.element(g.right_mul(i, k)).rep,
                                 expected_level))
                    throw Error(ErrorCode::ParseError, "right multiplication table is wrong");
        const auto& tj = j.at("table");
        if (tj.size() != g.order()) throw Error(ErrorCode::ParseError, "table size");
        for (std::size_t i = 0; i < g.order(); ++i) {
            const auto& row = tj[i];
            if (row.size() != g.order()) throw Error(ErrorCode::ParseError, "table row size");
            for (std::size_t k = 0; k < g.order(); ++k)
                if (row[k].get<std::size_t>() != g.op(i, k)) throw Error(ErrorCode::ParseError, "table entry");
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed cache: ") + e.what());
    }
}

std::filesystem::path GroupCache::path_for(Level n) const { return dir_ / ("N" + std::to_string(n) + ".json"); }

std::optional<QuotientGroup> GroupCache::load(Level n, std::uint64_t factor_cap) const {
    std::ifstream in(path_for(n), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return group_from_cache_json(buf.str(), n, factor_cap);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) throw;
        return std::nullopt;
    }
}

void GroupCache::store(const QuotientGroup& g) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create cache dir " + dir_.string() + ": " + ec.message());
    std::random_device rd;
    const auto target = path_for(g.level());
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out << group_to_cache_json(g);
        if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename into " + target.string());
    }
}

QuotientGroup obtain_group(Level n, std::size_t budget, std::uint64_t factor_cap, const GroupCache* cache) {
    if (cache) {
        if (auto hit = cache->load(n, factor_cap)) {
            if (hit->order() > budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "closure for N=" + std::to_string(n) + " exceeded budget of " + std::to_string(budget) +
                                " elements");
            return std::move(*hit);
        }
    }
    QuotientGroup g = close(canonical_generators(n, factor_cap), budget);
    if (cache && g.has_cayley_table()) {
        try {
            cache->store(g);
        } catch (const Error&) {
            // unwritable cache is not fatal
        }
    }
    return g;
}

} // namespace norm0
