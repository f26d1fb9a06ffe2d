// The subplane AG(2,2) inside AG(2,4): directions, Redei polynomial, and the
// bounds of the s/t theorem.
#include <iostream>

#include "redei/analysis.hpp"

int main() {
  using namespace redei;
  const Field f = make_field(2, 2);
  const auto u = AffinePointSet::from_codes(f, {0, 1, 4, 5});  // (0,0) (0,1) (1,0) (1,1)

  std::cout << "GF(4) modulus: " << modulus_string(f) << '\n';
  std::cout << "D = " << directions_of(u).to_string() << '\n';

  const auto sys = divide_xq(u);
  std::cout << "R = " << sys.r.to_string() << '\n';
  std::cout << "H = " << sys.h.to_string() << '\n';

  const auto ai = t_of_set(sys);
  std::cout << "s = " << *ai.s << ", t = " << ai.t << ", deg_X H = " << ai.deg_x_h << '\n';

  const auto v = classify_thm_m(u);
  for (const auto& c : v.checks)
    std::cout << (c.holds ? "  ok   " : "  FAIL ") << c.label << ": " << c.lhs.to_string() << ' ' << to_string(c.rel) << ' ' << c.rhs.to_string() << '\n';
  return v.failed() ? 1 : 0;
}
