// norm0 command-line front end. Talks to the library only through norm0.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "norm0/norm0.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

using json = nlohmann::json;

struct CtxDeleter {
    void operator()(norm0_ctx* c) const { norm0_ctx_free(c); }
};
struct GroupDeleter {
    void operator()(norm0_group* g) const { norm0_group_free(g); }
};
using CtxPtr = std::unique_ptr<norm0_ctx, CtxDeleter>;
using GroupPtr = std::unique_ptr<norm0_group, GroupDeleter>;

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { norm0_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(norm0_ctx* ctx, norm0_status st) {
    if (st != NORM0_OK) throw Failure(std::string(norm0_status_name(st)) + ": " + norm0_ctx_last_error(ctx));
}

std::optional<std::uint64_t> env_u64(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    std::uint64_t out = 0;
    std::istringstream is(v);
    if (!(is >> out) || !is.eof() || out == 0) throw Failure(std::string(name) + " must be a positive integer");
    return out;
}

struct Options {
    std::string cache_dir;
    bool no_cache = false;
};

CtxPtr make_ctx(const Options& opt) {
    norm0_ctx* raw = nullptr;
    if (norm0_ctx_new(&raw) != NORM0_OK) throw Failure("cannot allocate context");
    CtxPtr ctx(raw);
    if (auto b = env_u64("NORM0_BUDGET")) check(ctx.get(), norm0_ctx_set_budget(ctx.get(), *b));
    if (auto c = env_u64("NORM0_FACTOR_CAP")) check(ctx.get(), norm0_ctx_set_factor_cap(ctx.get(), *c));
    if (!opt.no_cache) {
        std::string dir = opt.cache_dir;
        if (dir.empty()) {
            const char* env = std::getenv("NORM0_CACHE");
            dir = env && *env ? env : ".norm0-cache";
        }
        check(ctx.get(), norm0_ctx_set_cache_dir(ctx.get(), dir.c_str()));
    }
    return ctx;
}

GroupPtr build_group(norm0_ctx* ctx, std::uint64_t n) {
    norm0_group* g = nullptr;
    check(ctx, norm0_group_build(ctx, n, &g));
    return GroupPtr(g);
}

std::string join_witness(const json& w) {
    std::string out;
    for (const auto& x : w) out += (out.empty() ? "" : ", ") + x.get<std::string>();
    return out;
}

int cmd_structure(const Options& opt, std::uint64_t n, const std::string& format, bool timing) {
    auto ctx = make_ctx(opt);
    check(ctx.get(), norm0_ctx_set_timing(ctx.get(), timing ? 1 : 0));
    OwnedString report;
    check(ctx.get(), norm0_structure_report(ctx.get(), n, &report.p));
    if (format == "json") {
        std::cout << report.str() << "\n";
    } else {
        OwnedString text;
        check(ctx.get(), norm0_report_text(ctx.get(), report.p, &text.p));
        std::cout << text.str();
    }
    return kExitTrue;
}

int cmd_check_claim(const Options& opt, std::uint64_t n) {
    auto ctx = make_ctx(opt);
    int holds = 0;
    OwnedString out;
    check(ctx.get(), norm0_check_claim(ctx.get(), n, &holds, &out.p));
    const json j = json::parse(out.str());
    if (holds) {
        std::cout << "N=" << n << ": direct-product claim holds\n";
        return kExitTrue;
    }
    std::cout << "N=" << n << ": direct-product claim fails [" << j["stage"].get<std::string>() << "]";
    if (!j["witness"].empty()) std::cout << " witness (" << join_witness(j["witness"]) << ")";
    std::cout << ": " << j["message"].get<std::string>() << "\n";
    return kExitFalse;
}

int cmd_eval(const Options& opt, std::uint64_t n, const std::string& word, const std::string& format) {
    auto ctx = make_ctx(opt);
    auto g = build_group(ctx.get(), n);
    std::size_t idx = 0;
    check(ctx.get(), norm0_group_eval(ctx.get(), g.get(), word.c_str(), &idx));
    OwnedString el;
    check(ctx.get(), norm0_group_element_json(ctx.get(), g.get(), idx, &el.p));
    json j = json::parse(el.str());
    if (format == "json") {
        j["N"] = n;
        j["input"] = word;
        std::cout << j.dump() << "\n";
        return kExitTrue;
    }
    const auto& m = j["matrix"];
    std::cout << "word: " << word << "\n";
    std::cout << "matrix: [[" << m[0].get<std::string>() << "," << m[1].get<std::string>() << "],["
              << m[2].get<std::string>() << "," << m[3].get<std::string>() << "]]\n";
    std::cout << "det: " << j["det"].get<std::string>() << "\n";
    std::cout << "element: " << idx << " (" << j["word"].get<std::string>() << ")\n";
    std::cout << "identity: " << (j["identity"].get<bool>() ? "true" : "false") << "\n";
    return kExitTrue;
}

int cmd_member(const Options& opt, std::uint64_t n, const std::string& quad, const std::string& format) {
    auto ctx = make_ctx(opt);
    OwnedString out;
    check(ctx.get(), norm0_member(ctx.get(), n, quad.c_str(), &out.p));
    const json j = json::parse(out.str());
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return kExitTrue;
    }
    const auto& m = j["matrix"];
    std::cout << "matrix: [[" << m[0].get<std::string>() << "," << m[1].get<std::string>() << "],["
              << m[2].get<std::string>() << "," << m[3].get<std::string>() << "]] det " << j["det"].get<std::string>()
              << "\n";
    if (j["member"].get<bool>()) {
        const auto& w = j["witness"];
        std::cout << "normalizer member: yes (delta=" << w["delta"] << ", Delta=" << w["Delta"]
                  << ", lambda=" << w["lambda"].get<std::string>() << ")\n";
    } else {
        std::cout << "normalizer member: no\n";
    }
    std::cout << "in Gamma0(" << n << "): " << (j["in_gamma0"].get<bool>() ? "yes" : "no") << "\n";
    return kExitTrue;
}

int cmd_cayley(const Options& opt, std::uint64_t n, const std::string& format, const std::string& out_path) {
    auto ctx = make_ctx(opt);
    auto g = build_group(ctx.get(), n);
    const norm0_export_format f =
        format == "gap" ? NORM0_EXPORT_GAP : format == "dot" ? NORM0_EXPORT_DOT : NORM0_EXPORT_JSON;
    OwnedString text, warning;
    check(ctx.get(), norm0_group_export(ctx.get(), g.get(), f, &text.p, &warning.p));
    if (warning.p) std::cerr << "warning: " << warning.str() << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text.str();
        if (format == "json") std::cout << "\n";
        return kExitTrue;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << text.str();
    if (format == "json") out << "\n";
    if (!out) throw Failure("cannot write " + out_path);
    std::cerr << "wrote " << out_path << " (" << norm0_group_order(g.get()) << " elements)\n";
    return kExitTrue;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    std::uint64_t lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
        } else {
            const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
            lo = std::stoull(a, &used);
            if (used != a.size()) throw std::invalid_argument(s);
            hi = std::stoull(b, &used);
            if (used != b.size()) throw std::invalid_argument(s);
        }
    } catch (const std::logic_error&) {
        throw Failure("range must look like A..B");
    }
    if (lo == 0 || hi < lo) throw Failure("range must satisfy 1 <= A <= B");
    if (hi - lo >= 1'000'000) throw Failure("range too large");
    return {lo, hi};
}

std::string csv_field(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '"') c = ';';
    return s;
}

int cmd_batch(const Options& opt, const std::string& range, const std::string& out_path) {
    const auto [lo, hi] = parse_range(range);
    auto ctx = make_ctx(opt);
    std::ostringstream os;
    os << "N,sigma,q,v,epsilon,order,claim_AL,note\n";
    for (std::uint64_t n = lo; n <= hi; ++n) {
        OwnedString report;
        const norm0_status st = norm0_structure_report(ctx.get(), n, &report.p);
        if (st != NORM0_OK) {
            os << n << ",,,,,,," << csv_field(std::string(norm0_status_name(st)) + ": " + norm0_ctx_last_error(ctx.get()))
               << "\n";
            continue;
        }
        const json j = json::parse(report.str());
        const auto& c = j["claim_AL"];
        std::string note;
        if (!c["holds"].get<bool>()) note = c["stage"].get<std::string>() + " " + join_witness(c["witness"]);
        if (!j["structure_ok"].get<bool>()) note += (note.empty() ? "" : " ") + std::string("structure mismatch");
        os << n << "," << j["sigma"] << "," << j["q"] << "," << j["v"] << "," << j["epsilon"] << "," << j["order"]
           << "," << (c["holds"].get<bool>() ? "true" : "false") << "," << csv_field(note) << "\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        out << os.str();
        if (!out) throw Failure("cannot write " + out_path);
    }
    return kExitTrue;
}

int cmd_selftest(const Options& opt) {
    auto ctx = make_ctx(opt);
    int passed = 0;
    OwnedString out;
    check(ctx.get(), norm0_selftest(ctx.get(), &passed, &out.p));
    const json j = json::parse(out.str());
    std::size_t ok = 0, total = 0;
    for (const auto& c : j["checks"]) {
        ++total;
        const bool p = c["passed"].get<bool>();
        ok += p;
        std::cout << (p ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (!p) std::cout << " -- " << c["detail"].get<std::string>();
        std::cout << "\n";
    }
    std::cout << ok << "/" << total << " checks passed\n";
    return passed ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm0: structure of Norm(Gamma_0(N))/Gamma_0(N)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(norm0_version()));
    Options opt;
    app.add_option("--cache-dir", opt.cache_dir, "Cache directory (default $NORM0_CACHE or .norm0-cache)");
    app.add_flag("--no-cache", opt.no_cache, "Disable the on-disk cache");

    std::uint64_t n = 1;
    std::string format, word, quad, out_path, range, report_kind = "csv";
    bool timing = false;
    int rc = kExitTrue;
    std::function<int()> action;

    auto level = [&](CLI::App* sub) { sub->add_option("N", n, "Level")->required()->check(CLI::PositiveNumber); };

    auto* structure = app.add_subcommand("structure", "Report the quotient structure for level N");
    level(structure);
    structure->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    structure->add_flag("--timing", timing, "Include wall-clock time in the report");
    structure->callback([&] { action = [&] { return cmd_structure(opt, n, format, timing); }; });

    auto* claim = app.add_subcommand("check-claim", "Decide the Atkin-Lehner direct-product statement");
    level(claim);
    claim->callback([&] { action = [&] { return cmd_check_claim(opt, n); }; });

    auto* eval = app.add_subcommand("eval", "Evaluate a word in the generators");
    level(eval);
    eval->add_option("word", word, "Word, e.g. \"(w16 S4)^3\"")->required();
    eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    eval->callback([&] { action = [&] { return cmd_eval(opt, n, word, format); }; });

    auto* member = app.add_subcommand("member", "Test normalizer membership of a matrix \"a,b,c,d\"");
    level(member);
    member->add_option("matrix", quad, "Integer matrix a,b,c,d")->required();
    member->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    member->callback([&] { action = [&] { return cmd_member(opt, n, quad, format); }; });

    auto* cayley = app.add_subcommand("cayley", "Export the multiplication table / Cayley graph");
    level(cayley);
    format = "";
    cayley->add_option("--format", format, "json, gap or dot")->check(CLI::IsMember({"json", "gap", "dot"}));
    cayley->add_option("--out", out_path, "Output file (default stdout)");
    cayley->callback([&] {
        action = [&] { return cmd_cayley(opt, n, format.empty() ? "json" : format, out_path); };
    });

    auto* batch = app.add_subcommand("batch", "Sweep a range of levels, e.g. 2..20");
    batch->add_option("range", range, "A..B")->required();
    batch->add_option("--report", report_kind, "Report kind")->check(CLI::IsMember({"csv"}));
    batch->add_option("--out", out_path, "Output file (default stdout)");
    batch->callback([&] { action = [&] { return cmd_batch(opt, range, out_path); }; });

    auto* selftest = app.add_subcommand("selftest", "Run the built-in regression checks");
    selftest->callback([&] { action = [&] { return cmd_selftest(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        rc = action();
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return rc;
}
