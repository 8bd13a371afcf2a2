#pragma once

#include <iosfwd>
#include <string>

#include "latgeo/hrep.hpp"
#include "latgeo/point.hpp"

namespace latgeo {

// Parse errors carry 1-based line numbers.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

// Point-set format: line 1 "n m", then m lines of n signed integers.
PointSet load_pointset(std::istream& in);
void store_pointset(std::ostream& out, const PointSet& set);

// H-rep format: line 1 "m n", then m lines "a_1 ... a_n | b" with exact
// rationals written "p/q" or plain integers.
HRep load_hrep(std::istream& in);
void store_hrep(std::ostream& out, const HRep& hrep);

PointSet load_pointset_file(const std::string& path);
HRep load_hrep_file(const std::string& path);

std::string pointset_to_string(const PointSet& set);
std::string hrep_to_string(const HRep& hrep);

}  // namespace latgeo
