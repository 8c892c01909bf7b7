#include "bbt/dimacs.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace bbt {

namespace {

bool read_int(std::istringstream& in, long long& out) {
    return static_cast<bool>(in >> out);
}

bool at_end(std::istringstream& in) {
    std::string rest;
    in >> rest;
    return rest.empty();
}

} // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    bool got_header = false;
    long long n = 0, declared_m = 0;
    std::set<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind)) continue; // blank line
        const std::string where = " at line " + std::to_string(line_no);
        if (kind == "c") {
            continue;
        } else if (kind == "p") {
            if (got_header) fail(errc::syntax_error, "second p line" + where);
            std::string format;
            if (!(fields >> format) || format != "edge")
                fail(errc::syntax_error, "expected 'p edge <n> <m>'" + where);
            if (!read_int(fields, n) || !read_int(fields, declared_m) || !at_end(fields) || n < 0 ||
                declared_m < 0)
                fail(errc::syntax_error, "expected 'p edge <n> <m>'" + where);
            got_header = true;
        } else if (kind == "e") {
            if (!got_header) fail(errc::missing_header, "e line before p line" + where);
            long long u = 0, v = 0;
            if (!read_int(fields, u) || !read_int(fields, v) || !at_end(fields))
                fail(errc::syntax_error, "expected 'e <u> <v>'" + where);
            if (u < 1 || u > n || v < 1 || v > n)
                fail(errc::vertex_out_of_range, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                                    " with n=" + std::to_string(n) + where);
            if (u == v) fail(errc::self_loop, "edge " + std::to_string(u) + " " + std::to_string(v) + where);
            edges.insert(make_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1));
        } else {
            fail(errc::syntax_error, "unknown line type '" + kind + "'" + where);
        }
    }
    if (!got_header) fail(errc::missing_header, "no p line found");
    if (warnings != nullptr && declared_m != static_cast<long long>(edges.size()))
        warnings->push_back("header declares " + std::to_string(declared_m) + " edges, file has " +
                            std::to_string(edges.size()) + " distinct edges");
    return Graph::from_edges(static_cast<int>(n), EdgeSet(edges.begin(), edges.end()));
}

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

} // namespace bbt
