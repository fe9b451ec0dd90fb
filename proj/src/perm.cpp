#include "genwait/perm.hpp"

#include <numeric>
#include <sstream>

namespace genwait {

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point s = 0; s < degree(); ++s) {
    if (seen[s] || im_[s] == s) continue;
    std::vector<Point> cyc;
    Point x = s;
    do {
      cyc.push_back(x);
      seen[x] = true;
      x = im_[x];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t Perm::element_order() const {
  std::uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace genwait
