#include "arcgrid/formats.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace arcgrid {

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream out;
    for (const Diagnostic& d : diags) {
        if (d.line > 0) out << "line " << d.line << ": ";
        out << d.message << "\n";
    }
    return out.str();
}

ParseError::ParseError(std::vector<Diagnostic> diags)
    : std::runtime_error(format_diagnostics(diags)), diags_(std::move(diags)) {}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Tokenized nonempty lines; blank lines are ignored.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

bool parse_int(const std::string& tok, long long& out) {
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

[[noreturn]] void fail(std::vector<Diagnostic> diags) {
    throw ParseError(std::move(diags));
}

void check_count(const std::vector<Line>& lines, std::size_t expected,
                 const char* what, std::vector<Diagnostic>& diags) {
    if (lines.size() == expected + 1) return;
    int line = lines.size() > expected + 1 ? lines[expected + 1].number : 0;
    diags.push_back({line, "expected " + std::to_string(expected) + " " + what +
                               " lines after the header, found " +
                               std::to_string(lines.size() - 1)});
}

} // namespace

CircularArcModel parse_arcs(const std::string& text) {
    std::vector<Diagnostic> diags;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail({{0, "empty input, expected an 'arcs <n>' header"}});

    const Line& header = lines[0];
    long long n = -1;
    if (header.tokens[0] != "arcs" || header.tokens.size() != 2 ||
        !parse_int(header.tokens[1], n) || n < 0)
        fail({{header.number, "malformed header, expected 'arcs <n>'"}});

    check_count(lines, static_cast<std::size_t>(n), "arc", diags);

    CircularArcModel m;
    std::set<std::string> ids;
    std::map<long long, int> endpoint_line; // endpoint value -> first line
    for (std::size_t i = 1; i < lines.size() && i <= static_cast<std::size_t>(n);
         ++i) {
        const Line& line = lines[i];
        long long tail = 0, head = 0;
        if (line.tokens[0] != "arc" || line.tokens.size() != 4 ||
            !parse_int(line.tokens[2], tail) || !parse_int(line.tokens[3], head)) {
            diags.push_back({line.number, "malformed line, expected 'arc <id> <tail> <head>'"});
            continue;
        }
        const std::string& id = line.tokens[1];
        if (!ids.insert(id).second)
            diags.push_back({line.number, "duplicate arc id " + id});
        if (tail == head)
            diags.push_back({line.number, "arc " + id + " has tail == head"});
        for (long long e : {tail, head}) {
            if (e < 1 || e > 2 * n) {
                diags.push_back({line.number,
                                 "endpoint " + std::to_string(e) +
                                     " out of range 1.." + std::to_string(2 * n)});
            } else if (!endpoint_line.emplace(e, line.number).second) {
                diags.push_back({line.number,
                                 "duplicate endpoint " + std::to_string(e) +
                                     " (first used on line " +
                                     std::to_string(endpoint_line[e]) + ")"});
            }
        }
        m.add_arc(id, static_cast<int>(tail), static_cast<int>(head));
    }
    if (!diags.empty()) fail(std::move(diags));
    return m;
}

std::string emit_arcs(const CircularArcModel& m) {
    std::ostringstream out;
    out << "arcs " << m.arc_count() << "\n";
    for (const Arc& a : m.arcs())
        out << "arc " << a.id << " " << a.tail << " " << a.head << "\n";
    return out.str();
}

GridModel parse_paths(const std::string& text) {
    std::vector<Diagnostic> diags;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail({{0, "empty input, expected a 'paths <n>' header"}});

    const Line& header = lines[0];
    long long n = -1;
    GridModel m;
    bool header_ok = header.tokens[0] == "paths" &&
                     (header.tokens.size() == 2 || header.tokens.size() == 7) &&
                     parse_int(header.tokens[1], n) && n >= 0;
    if (header_ok && header.tokens.size() == 7) {
        long long r[4];
        header_ok = header.tokens[2] == "rect";
        for (int i = 0; i < 4 && header_ok; ++i)
            header_ok = parse_int(header.tokens[3 + i], r[i]);
        if (header_ok) {
            m.epr = true;
            m.rect = GridRect{static_cast<int>(r[0]), static_cast<int>(r[1]),
                              static_cast<int>(r[2]), static_cast<int>(r[3])};
            if (r[0] >= r[1] || r[2] >= r[3])
                diags.push_back({header.number, "degenerate rectangle in header"});
        }
    }
    if (!header_ok)
        fail({{header.number,
               "malformed header, expected 'paths <n>' or 'paths <n> rect <r1> <r2> <c1> <c2>'"}});

    check_count(lines, static_cast<std::size_t>(n), "path", diags);

    std::set<std::string> ids;
    for (std::size_t i = 1; i < lines.size() && i <= static_cast<std::size_t>(n);
         ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "path" || line.tokens.size() < 4) {
            diags.push_back(
                {line.number, "malformed line, expected 'path <id> (r,c) (r,c) ...'"});
            continue;
        }
        GridPath p;
        p.id = line.tokens[1];
        if (!ids.insert(p.id).second)
            diags.push_back({line.number, "duplicate path id " + p.id});
        bool corners_ok = true;
        for (std::size_t t = 2; t < line.tokens.size(); ++t) {
            int r = 0, c = 0;
            int consumed = 0;
            if (std::sscanf(line.tokens[t].c_str(), "(%d,%d)%n", &r, &c,
                            &consumed) != 2 ||
                static_cast<std::size_t>(consumed) != line.tokens[t].size()) {
                diags.push_back({line.number, "malformed corner '" + line.tokens[t] +
                                                  "', expected '(r,c)'"});
                corners_ok = false;
                break;
            }
            p.corners.push_back(GridPoint{r, c});
        }
        if (!corners_ok) continue;
        for (const std::string& violation : validate_path(p))
            diags.push_back({line.number, "path " + p.id + ": " + violation});
        m.paths.push_back(std::move(p));
    }
    if (!diags.empty()) fail(std::move(diags));
    return m;
}

std::string emit_paths(const GridModel& m) {
    std::vector<const GridPath*> sorted;
    sorted.reserve(m.paths.size());
    for (const GridPath& p : m.paths) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const GridPath* a, const GridPath* b) { return a->id < b->id; });

    std::ostringstream out;
    out << "paths " << m.path_count();
    if (m.epr)
        out << " rect " << m.rect.row1 << " " << m.rect.row2 << " " << m.rect.col1
            << " " << m.rect.col2;
    out << "\n";
    for (const GridPath* p : sorted) {
        out << "path " << p->id;
        for (const GridPoint& c : p->corners)
            out << " (" << c.row << "," << c.col << ")";
        out << "\n";
    }
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::vector<Diagnostic> diags;
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail({{0, "empty input, expected a 'graph <n> <m>' header"}});

    const Line& header = lines[0];
    long long n = -1, mm = -1;
    if (header.tokens[0] != "graph" || header.tokens.size() != 3 ||
        !parse_int(header.tokens[1], n) || !parse_int(header.tokens[2], mm) ||
        n < 0 || mm < 0)
        fail({{header.number, "malformed header, expected 'graph <n> <m>'"}});

    if (lines.size() != static_cast<std::size_t>(n + mm) + 1)
        diags.push_back({0, "expected " + std::to_string(n) + " vertex and " +
                                std::to_string(mm) + " edge lines after the header, found " +
                                std::to_string(lines.size() - 1)});

    Graph g;
    std::set<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        bool vertex_section = i <= static_cast<std::size_t>(n);
        if (vertex_section) {
            if (line.tokens[0] != "vertex" || line.tokens.size() != 2) {
                diags.push_back({line.number, "malformed line, expected 'vertex <id>'"});
                continue;
            }
            if (g.has_vertex(line.tokens[1]))
                diags.push_back({line.number, "duplicate vertex id " + line.tokens[1]});
            else
                g.add_vertex(line.tokens[1]);
            continue;
        }
        if (line.tokens[0] != "edge" || line.tokens.size() != 3) {
            diags.push_back({line.number, "malformed line, expected 'edge <u> <v>'"});
            continue;
        }
        const std::string& u = line.tokens[1];
        const std::string& v = line.tokens[2];
        if (!g.has_vertex(u) || !g.has_vertex(v)) {
            diags.push_back({line.number, "edge references unknown vertex"});
            continue;
        }
        if (u == v) {
            diags.push_back({line.number, "self-loop on vertex " + u});
            continue;
        }
        if (!edges.insert(std::minmax(u, v)).second) {
            diags.push_back({line.number, "duplicate edge " + u + " " + v});
            continue;
        }
        g.add_edge(u, v);
    }
    if (!diags.empty()) fail(std::move(diags));
    return g;
}

std::string emit_graph(const Graph& g) {
    std::vector<std::string> ids = g.vertex_ids();
    std::sort(ids.begin(), ids.end());
    std::ostringstream out;
    out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const std::string& id : ids) out << "vertex " << id << "\n";
    for (const auto& [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
    return out.str();
}

std::string input_digest(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

} // namespace arcgrid
