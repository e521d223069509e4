#pragma once

#include "gia/algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gia {

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Line-oriented format, '#' starts a comment:
///   algebra <name>
///   size <n>
///   elements <lbl0> ... <lbl_{n-1}>
///   const <sym> = <lbl>
///   op <sym>/<arity> = <n^arity entries as labels, row-major, last argument fastest>
///   end
std::vector<FiniteAlgebra> parse_algebras(std::istream& in);
std::vector<FiniteAlgebra> parse_algebras_string(const std::string& text);
std::vector<FiniteAlgebra> parse_algebras_file(const std::string& path);

/// Serialization; parse(serialize(a)) reproduces a bit-exactly.
std::string serialize_algebra(const FiniteAlgebra& alg);

} // namespace gia
