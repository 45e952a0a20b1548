#include "norm0/norm0.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "norm0/cache.hpp"
#include "norm0/errors.hpp"
#include "norm0/export.hpp"
#include "norm0/report.hpp"
#include "norm0/selftest.hpp"
#include "norm0/structure_report.hpp"

struct norm0_ctx {
    std::size_t budget = norm0::kDefaultBudget;
    std::uint64_t factor_cap = norm0::kDefaultFactorCap;
    std::optional<norm0::GroupCache> cache;
    bool timing = false;
    std::string last_error;
};

struct norm0_group {
    norm0::QuotientGroup group;
};

namespace {

using norm0::ErrorCode;

norm0_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return NORM0_ERR_INVALID_ARGUMENT;
    case ErrorCode::SingularMatrix: return NORM0_ERR_SINGULAR;
    case ErrorCode::OrientationReversing: return NORM0_ERR_ORIENTATION;
    case ErrorCode::CapExceeded: return NORM0_ERR_CAP_EXCEEDED;
    case ErrorCode::BudgetExceeded: return NORM0_ERR_BUDGET_EXCEEDED;
    case ErrorCode::NotExactDivisor: return NORM0_ERR_NOT_EXACT_DIVISOR;
    case ErrorCode::NotInNormalizer:
    case ErrorCode::ShiftNotInNormalizer: return NORM0_ERR_NOT_IN_NORMALIZER;
    case ErrorCode::ParseError: return NORM0_ERR_PARSE;
    case ErrorCode::UnknownGenerator: return NORM0_ERR_UNKNOWN_GENERATOR;
    case ErrorCode::NotASubgroup: return NORM0_ERR_INVALID_ARGUMENT;
    case ErrorCode::DecompositionFailed: return NORM0_ERR_DECOMPOSITION;
    case ErrorCode::IoError: return NORM0_ERR_IO;
    }
    return NORM0_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the context message.
template <class F>
norm0_status guarded(norm0_ctx* ctx, F&& fn) {
    if (!ctx) return NORM0_ERR_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        fn();
        return NORM0_OK;
    } catch (const norm0::Error& e) {
        ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return NORM0_ERR_INTERNAL;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return NORM0_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw norm0::Error(ErrorCode::InvalidArgument, what);
}

norm0::QuotientGroup build(const norm0_ctx* ctx, std::uint64_t n) {
    require(n >= 1, "level must be positive");
    return norm0::obtain_group(n, ctx->budget, ctx->factor_cap, ctx->cache ? &*ctx->cache : nullptr);
}

norm0::ProjectiveMatrix parse_quad(const char* quad) {
    require(quad != nullptr, "matrix string is NULL");
    norm0::Mat2 m;
    norm0::Int* slots[4] = {&m.a, &m.b, &m.c, &m.d};
    std::string s(quad);
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t comma = s.find(',', start);
        if ((i < 3) != (comma != std::string::npos))
            throw norm0::Error(ErrorCode::ParseError, "matrix must be \"a,b,c,d\"");
        std::string tok = s.substr(start, i < 3 ? comma - start : std::string::npos);
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        tok = b == std::string::npos ? std::string{} : tok.substr(b, e - b + 1);
        if (tok.empty() || tok.find_first_not_of("+-0123456789") != std::string::npos ||
            slots[i]->set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
            throw norm0::Error(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
        start = comma + 1;
    }
    return norm0::canonicalize(m);
}

} // namespace

extern "C" {

const char* norm0_version(void) { return "1.0.0"; }

const char* norm0_status_name(norm0_status status) {
    switch (status) {
    case NORM0_OK: return "ok";
    case NORM0_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NORM0_ERR_SINGULAR: return "singular matrix";
    case NORM0_ERR_ORIENTATION: return "orientation reversing matrix";
    case NORM0_ERR_CAP_EXCEEDED: return "cap exceeded";
    case NORM0_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case NORM0_ERR_NOT_EXACT_DIVISOR: return "not an exact divisor";
    case NORM0_ERR_NOT_IN_NORMALIZER: return "not in normalizer";
    case NORM0_ERR_PARSE: return "parse error";
    case NORM0_ERR_UNKNOWN_GENERATOR: return "unknown generator";
    case NORM0_ERR_DECOMPOSITION: return "decomposition failed";
    case NORM0_ERR_IO: return "i/o error";
    case NORM0_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

norm0_status norm0_ctx_new(norm0_ctx** out) {
    if (!out) return NORM0_ERR_INVALID_ARGUMENT;
    *out = new (std::nothrow) norm0_ctx();
    return *out ? NORM0_OK : NORM0_ERR_INTERNAL;
}

void norm0_ctx_free(norm0_ctx* ctx) { delete ctx; }

norm0_status norm0_ctx_set_budget(norm0_ctx* ctx, uint64_t budget) {
    return guarded(ctx, [&] {
        require(budget > 0, "budget must be positive");
        ctx->budget = budget;
    });
}

norm0_status norm0_ctx_set_factor_cap(norm0_ctx* ctx, uint64_t cap) {
    return guarded(ctx, [&] {
        require(cap > 0, "factor cap must be positive");
        ctx->factor_cap = cap;
    });
}

norm0_status norm0_ctx_set_cache_dir(norm0_ctx* ctx, const char* dir) {
    return guarded(ctx, [&] {
        if (!dir || !*dir)
            ctx->cache.reset();
        else
            ctx->cache.emplace(dir);
    });
}

norm0_status norm0_ctx_set_timing(norm0_ctx* ctx, int enabled) {
    return guarded(ctx, [&] { ctx->timing = enabled != 0; });
}

const char* norm0_ctx_last_error(const norm0_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void norm0_string_free(char* s) { std::free(s); }

norm0_status norm0_group_build(norm0_ctx* ctx, uint64_t n, norm0_group** out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        *out = new norm0_group{build(ctx, n)};
    });
}

void norm0_group_free(norm0_group* group) { delete group; }

uint64_t norm0_group_level(const norm0_group* group) { return group ? group->group.level() : 0; }

size_t norm0_group_order(const norm0_group* group) { return group ? group->group.order() : 0; }

norm0_status norm0_group_eval(norm0_ctx* ctx, const norm0_group* group, const char* word, size_t* index_out) {
    return guarded(ctx, [&] {
        require(group && word && index_out, "NULL argument");
        *index_out = norm0::eval_word(group->group, norm0::parse_word(word));
    });
}

norm0_status norm0_group_element_json(norm0_ctx* ctx, const norm0_group* group, size_t index, char** json_out) {
    return guarded(ctx, [&] {
        require(group && json_out, "NULL argument");
        require(index < group->group.order(), "element index out of range");
        const auto& p = group->group.element(index).rep;
        nlohmann::ordered_json j;
        j["index"] = index;
        j["matrix"] = {p.a().get_str(), p.b().get_str(), p.c().get_str(), p.d().get_str()};
        j["det"] = p.det().get_str();
        j["word"] = norm0::format_word(group->group.word(index));
        j["identity"] = index == group->group.identity();
        *json_out = dup_string(j.dump());
    });
}

norm0_status norm0_group_export(norm0_ctx* ctx, const norm0_group* group, norm0_export_format format, char** out,
                                char** warning_out) {
    return guarded(ctx, [&] {
        require(group && out, "NULL argument");
        if (warning_out) *warning_out = nullptr;
        std::string text, warning;
        switch (format) {
        case NORM0_EXPORT_JSON: text = norm0::export_json(group->group); break;
        case NORM0_EXPORT_GAP: text = norm0::export_gap(group->group); break;
        case NORM0_EXPORT_DOT: text = norm0::export_dot(group->group, &warning); break;
        default: require(false, "unknown export format");
        }
        *out = dup_string(text);
        if (warning_out && !warning.empty()) *warning_out = dup_string(warning);
    });
}

norm0_status norm0_structure_report(norm0_ctx* ctx, uint64_t n, char** json_out) {
    return guarded(ctx, [&] {
        require(json_out != nullptr, "NULL argument");
        const auto t0 = std::chrono::steady_clock::now();
        norm0::Report r = norm0::build_report(build(ctx, n));
        if (ctx->timing)
            r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        *json_out = dup_string(norm0::report_to_json(r));
    });
}

norm0_status norm0_report_text(norm0_ctx* ctx, const char* report_json, char** text_out) {
    return guarded(ctx, [&] {
        require(report_json && text_out, "NULL argument");
        *text_out = dup_string(norm0::report_to_text(norm0::report_from_json(report_json)));
    });
}

norm0_status norm0_check_claim(norm0_ctx* ctx, uint64_t n, int* holds_out, char** json_out) {
    return guarded(ctx, [&] {
        require(holds_out != nullptr, "NULL argument");
        const norm0::ClaimVerdict v = norm0::check_claim_al(build(ctx, n));
        *holds_out = v.holds ? 1 : 0;
        if (json_out) {
            nlohmann::ordered_json j;
            j["N"] = n;
            j["holds"] = v.holds;
            j["stage"] = v.stage;
            j["witness"] = nlohmann::ordered_json::array();
            if (!v.witness_a.empty()) j["witness"].push_back(v.witness_a);
            if (!v.witness_b.empty()) j["witness"].push_back(v.witness_b);
            j["message"] = v.message;
            *json_out = dup_string(j.dump());
        }
    });
}

norm0_status norm0_member(norm0_ctx* ctx, uint64_t n, const char* quad, char** json_out) {
    return guarded(ctx, [&] {
        require(json_out != nullptr, "NULL argument");
        require(n >= 1, "level must be positive");
        const norm0::ProjectiveMatrix p = parse_quad(quad);
        const auto w = norm0::theorem1_member(p, n, ctx->factor_cap);
        nlohmann::ordered_json j;
        j["N"] = n;
        j["matrix"] = {p.a().get_str(), p.b().get_str(), p.c().get_str(), p.d().get_str()};
        j["det"] = p.det().get_str();
        j["member"] = w.has_value();
        if (w)
            j["witness"] = {{"delta", w->delta}, {"Delta", w->Delta}, {"lambda", w->lambda.get_str()}};
        else
            j["witness"] = nullptr;
        j["in_gamma0"] = norm0::is_gamma0(p, n);
        *json_out = dup_string(j.dump());
    });
}

norm0_status norm0_selftest(norm0_ctx* ctx, int* passed_out, char** json_out) {
    return guarded(ctx, [&] {
        require(passed_out != nullptr, "NULL argument");
        const auto checks = norm0::run_selftest(ctx->budget, ctx->factor_cap, ctx->cache ? &*ctx->cache : nullptr);
        bool all = true;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            all = all && c.passed;
            arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        *passed_out = all ? 1 : 0;
        if (json_out) *json_out = dup_string(nlohmann::ordered_json{{"passed", all}, {"checks", arr}}.dump());
    });
}

} // extern "C"
