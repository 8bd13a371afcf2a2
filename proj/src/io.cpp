#include "latgeo/io.hpp"

#include <fstream>
#include <sstream>

namespace latgeo {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

mpz_class parse_int(const std::string& tok, int line) {
    try {
        return mpz_class(tok);
    } catch (...) {
        throw ParseError(line, "malformed integer '" + tok + "'");
    }
}

}  // namespace

PointSet load_pointset(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    auto head = tokens_of(line);
    if (head.size() != 2) throw ParseError(lineno, "expected header 'n m'");
    long n = parse_int(head[0], lineno).get_si();
    long m = parse_int(head[1], lineno).get_si();
    if (n < 1) throw ParseError(lineno, "dimension must be >= 1");
    if (m < 0) throw ParseError(lineno, "point count must be >= 0");
    PointSet set(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of input");
        ++lineno;
        auto toks = tokens_of(line);
        if (static_cast<long>(toks.size()) != n)
            throw ParseError(lineno, "expected " + std::to_string(n) + " coordinates");
        Point p;
        p.reserve(n);
        for (const auto& t : toks) p.push_back(parse_int(t, lineno));
        if (!set.insert(std::move(p))) throw ParseError(lineno, "duplicate point");
    }
    return set;
}

void store_pointset(std::ostream& out, const PointSet& set) {
    out << set.dim() << ' ' << set.size() << '\n';
    for (const auto& p : set) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << p[i].get_str();
        }
        out << '\n';
    }
}

HRep load_hrep(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    auto head = tokens_of(line);
    if (head.size() != 2) throw ParseError(lineno, "expected header 'm n'");
    long m = parse_int(head[0], lineno).get_si();
    long n = parse_int(head[1], lineno).get_si();
    if (n < 1) throw ParseError(lineno, "dimension must be >= 1");
    if (m < 0) throw ParseError(lineno, "row count must be >= 0");
    HRep hrep;
    hrep.dim = static_cast<int>(n);
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of input");
        ++lineno;
        auto toks = tokens_of(line);
        if (static_cast<long>(toks.size()) != n + 2 || toks[n] != "|")
            throw ParseError(lineno, "expected 'a_1 ... a_n | b'");
        QPoint normal;
        normal.reserve(n);
        try {
            for (long j = 0; j < n; ++j) normal.push_back(parse_rational(toks[j]));
            mpq_class offset = parse_rational(toks[n + 1]);
            hrep.add_row(std::move(normal), std::move(offset));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return hrep;
}

void store_hrep(std::ostream& out, const HRep& hrep) {
    out << hrep.rows.size() << ' ' << hrep.dim << '\n';
    for (const auto& r : hrep.rows) {
        for (const auto& c : r.normal) out << format_rational(c) << ' ';
        out << "| " << format_rational(r.offset) << '\n';
    }
}

PointSet load_pointset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return load_pointset(in);
}

HRep load_hrep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return load_hrep(in);
}

std::string pointset_to_string(const PointSet& set) {
    std::ostringstream out;
    store_pointset(out, set);
    return out.str();
}

std::string hrep_to_string(const HRep& hrep) {
    std::ostringstream out;
    store_hrep(out, hrep);
    return out.str();
}

}  // namespace latgeo
