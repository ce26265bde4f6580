#include "bitflip/alist.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bitflip {

namespace {

struct LineReader {
    std::istringstream in;
    std::size_t lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::vector<long long> numbers(const std::string& what, std::size_t expect) {
        std::string line;
        do {
            if (!std::getline(in, line))
                throw Error("alist parse error: line " + std::to_string(lineno + 1) +
                            ": missing " + what);
            ++lineno;
        } while (line.find_first_not_of(" \t\r") == std::string::npos);

        std::istringstream ls(line);
        std::vector<long long> vals;
        long long v;
        while (ls >> v) vals.push_back(v);
        std::string rest;
        if (ls.clear(), ls >> rest)
            throw Error("alist parse error: line " + std::to_string(lineno) +
                        ": unexpected token '" + rest + "'");
        if (vals.size() != expect)
            throw Error("alist parse error: line " + std::to_string(lineno) + ": expected " +
                        std::to_string(expect) + " value(s) for " + what + ", got " +
                        std::to_string(vals.size()));
        return vals;
    }
};

}  // namespace

BinaryMatrix parse_alist(const std::string& text) {
    LineReader r(text);

    const auto dims = r.numbers("matrix dimensions", 2);
    const long long n = dims[0], m = dims[1];
    if (n < 1 || m < 1) throw Error("alist parse error: line 1: dimensions must be positive");

    const auto maxima = r.numbers("weight maxima", 2);
    const long long cmax = maxima[0], rmax = maxima[1];
    if (cmax < 0 || rmax < 0) throw Error("alist parse error: line 2: negative weight maximum");

    const auto cw = r.numbers("column weights", static_cast<std::size_t>(n));
    const auto rw = r.numbers("row weights", static_cast<std::size_t>(m));
    for (auto w : cw)
        if (w < 0 || w > cmax)
            throw Error("alist parse error: line 3: column weight outside [0, cmax]");
    for (auto w : rw)
        if (w < 0 || w > rmax)
            throw Error("alist parse error: line 4: row weight outside [0, rmax]");

    BinaryMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const auto entries =
            r.numbers("column " + std::to_string(i + 1), static_cast<std::size_t>(cmax));
        long long seen = 0;
        for (auto e : entries) {
            if (e == 0) continue;
            if (e < 1 || e > m)
                throw Error("alist parse error: line " + std::to_string(r.lineno) +
                            ": row index " + std::to_string(e) + " out of range");
            h.set(static_cast<std::size_t>(e - 1), static_cast<std::size_t>(i));
            ++seen;
        }
        if (seen != cw[static_cast<std::size_t>(i)])
            throw Error("alist parse error: line " + std::to_string(r.lineno) +
                        ": column weight header mismatch");
    }

    // Row lists are redundant; cross-check them against the column lists.
    for (long long j = 0; j < m; ++j) {
        const auto entries =
            r.numbers("row " + std::to_string(j + 1), static_cast<std::size_t>(rmax));
        BitVec row(static_cast<std::size_t>(n));
        for (auto e : entries) {
            if (e == 0) continue;
            if (e < 1 || e > n)
                throw Error("alist parse error: line " + std::to_string(r.lineno) +
                            ": column index " + std::to_string(e) + " out of range");
            row.set(static_cast<std::size_t>(e - 1));
        }
        if (row.count() != static_cast<std::size_t>(rw[static_cast<std::size_t>(j)]))
            throw Error("alist parse error: line " + std::to_string(r.lineno) +
                        ": row weight header mismatch");
        if (!(row == h.row(static_cast<std::size_t>(j))))
            throw Error("alist parse error: line " + std::to_string(r.lineno) +
                        ": row list inconsistent with column lists");
    }
    return h;
}

std::string write_alist(const BinaryMatrix& h) {
    const std::size_t m = h.rows(), n = h.cols();
    if (m < 1) throw Error("write_alist: matrix must have at least one row");

    std::vector<std::vector<std::uint32_t>> col_idx(n);
    for (std::size_t j = 0; j < m; ++j)
        for (std::uint32_t i : h.row(j).indices()) col_idx[i].push_back(static_cast<std::uint32_t>(j + 1));

    std::size_t cmax = 0, rmax = 0;
    for (const auto& c : col_idx) cmax = std::max(cmax, c.size());
    for (std::size_t j = 0; j < m; ++j) rmax = std::max(rmax, h.row(j).count());

    std::ostringstream out;
    out << n << ' ' << m << '\n' << cmax << ' ' << rmax << '\n';
    for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << col_idx[i].size();
    out << '\n';
    for (std::size_t j = 0; j < m; ++j) out << (j ? " " : "") << h.row(j).count();
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < cmax; ++k)
            out << (k ? " " : "") << (k < col_idx[i].size() ? col_idx[i][k] : 0);
        out << '\n';
    }
    for (std::size_t j = 0; j < m; ++j) {
        const auto idx = h.row(j).indices();
        for (std::size_t k = 0; k < rmax; ++k)
            out << (k ? " " : "") << (k < idx.size() ? idx[k] + 1 : 0);
        out << '\n';
    }
    return out.str();
}

BinaryMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alist(buf.str());
}

void write_alist_file(const std::string& path, const BinaryMatrix& h) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << write_alist(h);
}

}  // namespace bitflip
