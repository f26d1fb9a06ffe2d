// Removes a point from AG(2,2) in AG(2,4) and lists every way to get back to
// four points without adding a direction.
#include <iostream>

#include "redei/search.hpp"

int main() {
  using namespace redei;
  const Field f = make_field(2, 2);
  const auto u = AffinePointSet::from_codes(f, {0, 1, 4});
  const auto res = complete_to_q({u});
  std::cout << "hypotheses " << (res.hypotheses_hold ? "hold" : "fail") << "; completions: " << res.completions.size() << '\n';
  for (const auto& c : res.completions) {
    for (const auto& pt : c.points()) std::cout << " (" << pt.a.v << ',' << pt.b.v << ')';
    std::cout << '\n';
  }
  return 0;
}
