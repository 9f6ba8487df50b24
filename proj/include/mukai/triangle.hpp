#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mukai/schubert.hpp"

namespace mukai::schubert {

/// Coefficients of a class on Gr(2,n) arranged as a triangle: row r lists
/// the coefficients of σ_{r,0}, σ_{r,1}, ..., σ_{r,r} for r = 0..n-2.
using Triangle = std::vector<std::vector<Int>>;

Triangle to_triangle(const ChowClassGr& total);
ChowClassGr from_triangle(int n, const Triangle& t);

/// Plain-text triangle format: one row per line, integers separated by
/// single spaces. Lines starting with '#' and blank lines are ignored.
std::string format_triangle(const Triangle& t);
Triangle parse_triangle(std::istream& in);
Triangle parse_triangle(const std::string& text);

}  // namespace mukai::schubert
