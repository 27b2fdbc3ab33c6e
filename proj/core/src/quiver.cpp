#include "bpscheck/quiver.hpp"

#include <fstream>
#include <sstream>

namespace bps {

Quiver::Quiver(int n, std::vector<std::pair<int, int>> a) : n_vertices(n), arrows(std::move(a)) {
    if (n_vertices < 0) throw Error("quiver: negative vertex count");
    for (const auto& [s, t] : arrows)
        if (s < 0 || s >= n_vertices || t < 0 || t >= n_vertices)
            throw Error("quiver: arrow endpoint outside vertex set");
}

Quiver Quiver::loops(int g) {
    if (g < 0) throw Error("quiver: negative loop count");
    std::vector<std::pair<int, int>> a(static_cast<size_t>(g), {0, 0});
    return Quiver(1, std::move(a));
}

namespace {

void check_dims(const Quiver& Q, const DimVector& d, const char* op) {
    if (static_cast<int>(d.size()) != Q.n_vertices)
        throw Error(std::string(op) + ": dimension vector length does not match vertex count");
    for (long v : d)
        if (v < 0) throw Error(std::string(op) + ": negative dimension entry");
}

} // namespace

long euler_form(const Quiver& Q, const DimVector& d, const DimVector& e) {
    check_dims(Q, d, "euler_form");
    check_dims(Q, e, "euler_form");
    long acc = 0;
    for (int i = 0; i < Q.n_vertices; ++i) acc += d[static_cast<size_t>(i)] * e[static_cast<size_t>(i)];
    for (const auto& [s, t] : Q.arrows) acc -= d[static_cast<size_t>(s)] * e[static_cast<size_t>(t)];
    return acc;
}

long sym_euler(const Quiver& Q, const DimVector& d, const DimVector& e) {
    return euler_form(Q, d, e) + euler_form(Q, e, d);
}

long serre_exponent(const Quiver& Q, const DimVector& d1, const DimVector& d2) {
    long pairing = sym_euler(Q, d1, d2);
    if (pairing > 0) {
        std::ostringstream msg;
        msg << "serre_exponent: symmetrized form is " << pairing << " > 0";
        throw Error(msg.str());
    }
    return 1 - pairing;
}

Quiver triple_quiver(const Quiver& Q) {
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(2 * Q.arrows.size() + static_cast<size_t>(Q.n_vertices));
    for (const auto& [s, t] : Q.arrows) arrows.emplace_back(s, t);
    for (const auto& [s, t] : Q.arrows) arrows.emplace_back(t, s);
    for (int i = 0; i < Q.n_vertices; ++i) arrows.emplace_back(i, i);
    return Quiver(Q.n_vertices, std::move(arrows));
}

VirtualDimension preproj_vdim(const Quiver& Q, const DimVector& d) {
    long chi = euler_form(Q, d, d);
    return VirtualDimension{static_cast<int>(-2 * chi)};
}

Quiver parse_quiver(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n_vertices = -1;
    std::vector<std::pair<int, int>> arrows;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "vertices:") {
            if (n_vertices >= 0)
                throw Error("quiver parse: line " + std::to_string(lineno) + ": duplicate vertices line");
            if (!(ls >> n_vertices) || n_vertices < 0)
                throw Error("quiver parse: line " + std::to_string(lineno) + ": malformed vertex count");
        } else if (keyword == "arrow:") {
            if (n_vertices < 0)
                throw Error("quiver parse: line " + std::to_string(lineno) + ": arrow before vertices line");
            int s, t;
            if (!(ls >> s >> t))
                throw Error("quiver parse: line " + std::to_string(lineno) + ": malformed arrow");
            if (s < 0 || s >= n_vertices || t < 0 || t >= n_vertices)
                throw Error("quiver parse: line " + std::to_string(lineno) + ": arrow endpoint out of range");
            arrows.emplace_back(s, t);
        } else {
            throw Error("quiver parse: line " + std::to_string(lineno) + ": unknown directive '" + keyword + "'");
        }
    }
    if (n_vertices < 0) throw Error("quiver parse: missing vertices line");
    return Quiver(n_vertices, std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open quiver file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

} // namespace bps
