#include "bowtie/hlg_io.hpp"

#include <fstream>
#include <sstream>

#include "bowtie/errors.hpp"
#include "bowtie/util.hpp"

namespace bowtie {

namespace {

[[noreturn]] void fail(long long line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) return false;
    for (; i < token.size(); ++i)
        if (token[i] < '0' || token[i] > '9') return false;
    try {
        out = std::stoll(token);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

std::vector<long long> parse_int_line(const std::string& line, long long lineno) {
    std::istringstream iss(line);
    std::vector<long long> out;
    std::string token;
    while (iss >> token) {
        long long value;
        if (!parse_int(token, value)) fail(lineno, "not an integer: '" + token + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

LinearHypergraph parse_hlg(std::istream& in) {
    std::string line;
    long long lineno = 0;

    if (!std::getline(in, line)) fail(1, "missing header 'n r t m'");
    ++lineno;
    auto header = parse_int_line(line, lineno);
    if (header.size() != 4) fail(lineno, "header must be 'n r t m'");
    auto [n, r, t, m] = std::tuple(header[0], header[1], header[2], header[3]);
    if (n < 0 || n > (1LL << 30)) fail(lineno, "vertex count out of range");
    if (r < 2 || r > (1LL << 20)) fail(lineno, "uniformity must satisfy r >= 2");
    if (t < 2 || t > r) fail(lineno, "linearity must satisfy 2 <= t <= r");
    if (m < 0 || m > (1LL << 30)) fail(lineno, "edge count out of range");

    LinearHypergraph g;
    g.n = static_cast<int>(n);
    g.r = static_cast<int>(r);
    g.t = static_cast<int>(t);
    g.edges.reserve(static_cast<size_t>(m));

    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) fail(lineno + 1, "expected " + std::to_string(m) +
                                                          " edge lines, file ends after " +
                                                          std::to_string(i));
        ++lineno;
        auto ids = parse_int_line(line, lineno);
        if (static_cast<long long>(ids.size()) != r)
            fail(lineno, "expected " + std::to_string(r) + " vertex ids, got " +
                             std::to_string(ids.size()));
        std::vector<int> edge;
        edge.reserve(ids.size());
        for (long long v : ids) {
            if (v < 0 || v >= n)
                fail(lineno, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            edge.push_back(static_cast<int>(v));
        }
        g.edges.push_back(std::move(edge));
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            fail(lineno, "unexpected content after " + std::to_string(m) + " edges");
    }

    g.normalize();
    return g;
}

LinearHypergraph parse_hlg_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_hlg(iss);
}

LinearHypergraph read_hlg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    try {
        return parse_hlg(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string to_hlg_string(const LinearHypergraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.r << ' ' << g.t << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

void write_hlg_file(const std::string& path, const LinearHypergraph& g) {
    write_file(path, to_hlg_string(g));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("short write to '" + path + "'");
}

std::string file_digest(const std::string& path) {
    return hex64(fnv1a64(read_file(path)));
}

} // namespace bowtie
