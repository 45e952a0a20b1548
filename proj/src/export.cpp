#include "norm0/export.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace norm0 {

std::string export_json(const QuotientGroup& g) {
    nlohmann::ordered_json j;
    j["N"] = g.level();
    j["order"] = g.order();
    j["generators"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < g.generators().size(); ++k)
        j["generators"].push_back({{"name", g.generators().generators[k].name}, {"element", g.generator_element(k)}});
    j["elements"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        const auto& p = g.element(i).rep;
        j["elements"].push_back({{"index", i},
                                 {"matrix", {p.a().get_str(), p.b().get_str(), p.c().get_str(), p.d().get_str()}},
                                 {"det", p.det().get_str()},
                                 {"word", format_word(g.word(i))}});
    }
    j["table"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::vector<std::size_t> row(g.order());
        for (std::size_t k = 0; k < g.order(); ++k) row[k] = g.op(i, k);
        j["table"].push_back(row);
    }
    return j.dump(1);
}

namespace {

std::string cycles(const std::vector<std::size_t>& perm) {
    std::vector<char> seen(perm.size() + 1, 0);
    std::string out;
    for (std::size_t start = 1; start <= perm.size(); ++start) {
        if (seen[start] || perm[start - 1] == start) continue;
        out += "(";
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ",";
            out += std::to_string(x);
            first = false;
            x = perm[x - 1];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace

std::string export_gap(const QuotientGroup& g) {
    std::ostringstream os;
    os << "# Norm(Gamma0(" << g.level() << "))/Gamma0(" << g.level() << "): regular permutation representation\n";
    os << "# degree " << g.order() << ", points are element indices + 1\n";
    const auto perms = regular_representation(g);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        names.push_back(g.generators().generators[k].name);
        os << names.back() << " := " << cycles(perms[k]) << ";\n";
    }
    os << "G := Group(";
    if (names.empty()) os << "()";
    for (std::size_t k = 0; k < names.size(); ++k) os << (k ? ", " : "") << names[k];
    os << ");\n";
    os << "Print(\"order \", Size(G), \" expected " << g.order() << "\\n\");\n";
    return os.str();
}

std::string export_dot(const QuotientGroup& g, std::string* warning) {
    static const char* const colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
    const std::size_t n = std::min(g.order(), kDotNodeCap);
    if (warning) {
        warning->clear();
        if (g.order() > kDotNodeCap)
            *warning = "group has " + std::to_string(g.order()) + " elements; graph truncated to " +
                       std::to_string(kDotNodeCap) + " nodes";
    }
    std::ostringstream os;
    os << "digraph cayley_N" << g.level() << " {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < n; ++i) os << "  n" << i << " [label=\"" << format_word(g.word(i)) << "\"];\n";
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const char* col = colors[k % (sizeof(colors) / sizeof(colors[0]))];
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = g.right_mul(i, k);
            if (j >= n) continue;
            os << "  n" << i << " -> n" << j << " [color=" << col << ", label=\"" << g.generators().generators[k].name
               << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace norm0
