#include "scm/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace scm {

namespace {

struct Line {
    int number;
    std::string text;
};

// Strips comments and blank lines, keeping 1-based numbering.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string line = raw.substr(0, raw.find('#'));
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(a, b - a + 1)});
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_vertex(const std::string& tok, int line_no) {
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a vertex id, got '" + tok + "'",
                             line_no, 1);
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw ParseError("vertex id out of range: '" + tok + "'", line_no, 1);
    }
}

} // namespace

SimplicialComplex parse_complex(const std::string& text) {
    std::vector<Face> facets;
    std::vector<int> ground;
    bool ground_declared = false;
    for (const Line& line : significant_lines(text)) {
        auto toks = tokens_of(line.text);
        if (!toks.empty() && toks[0] == "ground") {
            if (ground_declared)
                throw ParseError("duplicate ground header", line.number, 1);
            if (toks.size() != 2)
                throw ParseError("ground header needs one count", line.number, 1);
            int n = parse_vertex(toks[1], line.number);
            for (int v = 1; v <= n; ++v) ground.push_back(v);
            ground_declared = true;
            continue;
        }
        if (toks.size() == 1 && toks[0] == "*") {
            facets.push_back(Face{});
            continue;
        }
        std::vector<int> verts;
        verts.reserve(toks.size());
        for (const auto& t : toks) verts.push_back(parse_vertex(t, line.number));
        try {
            facets.push_back(Face(std::move(verts)));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line.number, 1);
        }
    }
    if (!ground_declared) {
        for (const Face& f : facets)
            ground.insert(ground.end(), f.vertices().begin(),
                          f.vertices().end());
    }
    try {
        return from_facets(facets, ground);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string format_complex(const SimplicialComplex& cx) {
    std::ostringstream out;
    const auto& g = cx.ground_set();
    bool contiguous = true;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i) + 1) contiguous = false;
    if (contiguous && !g.empty()) out << "ground " << g.size() << "\n";
    for (const Face& f : cx.facets()) {
        if (f.empty()) {
            out << "*\n";
            continue;
        }
        for (std::size_t i = 0; i < f.card(); ++i) {
            if (i) out << ' ';
            out << f.vertices()[i];
        }
        out << "\n";
    }
    return out.str();
}

NamedPoset parse_poset(const std::string& text) {
    NamedPoset out;
    std::map<std::string, int> id_of;
    std::vector<std::pair<int, int>> covers;
    bool header_seen = false;
    for (const Line& line : significant_lines(text)) {
        auto toks = tokens_of(line.text);
        if (!header_seen) {
            if (toks.empty() || toks[0] != "elements")
                throw ParseError("poset file must start with an 'elements' header",
                                 line.number, 1);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (id_of.count(toks[i]))
                    throw ParseError("duplicate element '" + toks[i] + "'",
                                     line.number, 1);
                id_of[toks[i]] = static_cast<int>(out.labels.size());
                out.labels.push_back(toks[i]);
            }
            header_seen = true;
            continue;
        }
        if (toks.size() != 3 || toks[1] != "<")
            throw ParseError("expected a cover line 'a < b'", line.number, 1);
        auto a = id_of.find(toks[0]);
        auto b = id_of.find(toks[2]);
        if (a == id_of.end())
            throw ParseError("unknown element '" + toks[0] + "'", line.number, 1);
        if (b == id_of.end())
            throw ParseError("unknown element '" + toks[2] + "'", line.number, 1);
        covers.emplace_back(a->second, b->second);
    }
    if (!header_seen)
        throw ParseError("poset file must start with an 'elements' header", 1, 1);
    std::vector<int> ids(out.labels.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    try {
        out.poset = FinitePoset::from_covers(ids, covers);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
    return out;
}

std::string format_poset(const FinitePoset& p,
                         const std::vector<std::string>& labels) {
    auto name = [&](int x) {
        if (x >= 0 && static_cast<std::size_t>(x) < labels.size())
            return labels[static_cast<std::size_t>(x)];
        return "e" + std::to_string(x);
    };
    std::ostringstream out;
    out << "elements";
    for (int x : p.elements()) out << ' ' << name(x);
    out << "\n";
    for (auto [a, b] : p.covers()) out << name(a) << " < " << name(b) << "\n";
    return out.str();
}

SquarefreeIdeal parse_ideal(const std::string& text) {
    // Same token syntax as facet lists; incomparability is enforced by the
    // ideal constructor.
    std::vector<Face> gens;
    std::vector<int> ground;
    bool ground_declared = false;
    for (const Line& line : significant_lines(text)) {
        auto toks = tokens_of(line.text);
        if (!toks.empty() && toks[0] == "ground") {
            int n = parse_vertex(toks[1], line.number);
            for (int v = 1; v <= n; ++v) ground.push_back(v);
            ground_declared = true;
            continue;
        }
        if (toks.size() == 1 && toks[0] == "*") {
            gens.push_back(Face{});
            continue;
        }
        std::vector<int> verts;
        for (const auto& t : toks) verts.push_back(parse_vertex(t, line.number));
        gens.push_back(Face(std::move(verts)));
    }
    int n = 0;
    if (ground_declared)
        n = static_cast<int>(ground.size());
    else
        for (const Face& f : gens)
            if (!f.empty()) n = std::max(n, f.vertices().back());
    try {
        return SquarefreeIdeal(n, std::move(gens));
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string format_ideal(const SquarefreeIdeal& ideal) {
    std::ostringstream out;
    out << "ground " << ideal.n << "\n";
    for (const Face& g : ideal.generators) {
        if (g.empty()) {
            out << "*\n";
            continue;
        }
        for (std::size_t i = 0; i < g.card(); ++i) {
            if (i) out << ' ';
            out << g.vertices()[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_poset(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) return false;
    auto toks = tokens_of(lines.front().text);
    return !toks.empty() && toks[0] == "elements";
}

} // namespace scm
