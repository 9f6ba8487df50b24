#include "mukai/triangle.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace mukai::schubert {

Triangle to_triangle(const ChowClassGr& total) {
  const int rows = total.ambient() - 1;
  Triangle t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j <= r; ++j) t[static_cast<std::size_t>(r)].push_back(total.coefficient(r, j));
  return t;
}

ChowClassGr from_triangle(int n, const Triangle& t) {
  if (static_cast<int>(t.size()) != n - 1) throw std::invalid_argument("from_triangle: wrong number of rows");
  ChowClassGr x(n);
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].size() != r + 1) throw std::invalid_argument("from_triangle: row " + std::to_string(r) + " has wrong length");
    for (std::size_t j = 0; j <= r; ++j) x.add({static_cast<int>(r), static_cast<int>(j)}, t[r][j]);
  }
  return x;
}

std::string format_triangle(const Triangle& t) {
  std::ostringstream os;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

Triangle parse_triangle(std::istream& in) {
  Triangle t;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Int> row;
    Int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("parse_triangle: non-integer entry in line '" + line + "'");
    if (row.size() != t.size() + 1)
      throw std::invalid_argument("parse_triangle: row " + std::to_string(t.size()) + " must have " +
                                  std::to_string(t.size() + 1) + " entries");
    t.push_back(std::move(row));
  }
  return t;
}

Triangle parse_triangle(const std::string& text) {
  std::istringstream in(text);
  return parse_triangle(in);
}

}  // namespace mukai::schubert
