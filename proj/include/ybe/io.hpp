#pragma once

#include <iosfwd>
#include <string>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Text formats, whitespace separated, 0-based indices, '#' starts a comment
// line.  Solution files:
//     n 6
//     sigma
//     <n rows of n integers, row x = images of sigma_x>
// Brace files:
//     n 6
//     add
//     <n rows of n integers>
//     mul
//     <n rows of n integers>
// Element 0 is the shared neutral element.  Parse errors carry line:column.

FiniteSolution read_solution(std::istream &in);
FiniteBrace read_brace(std::istream &in);
FiniteSolution read_solution_file(const std::string &path);
FiniteBrace read_brace_file(const std::string &path);

void write_solution(std::ostream &out, const FiniteSolution &s);
void write_brace(std::ostream &out, const FiniteBrace &b);
std::string write_solution_string(const FiniteSolution &s);
std::string write_brace_string(const FiniteBrace &b);

}  // namespace ybe
