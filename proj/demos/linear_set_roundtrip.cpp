// Projects PG(2,2) from a point of PG(2,16) off the subgeometry onto a line,
// then lifts the image back to an affine GF(2)-linear set of AG(2,16) whose
// direction set is the projected set.
#include <iostream>

#include "redei/linsets.hpp"
#include "redei/random.hpp"

int main() {
  using namespace redei;
  const Field f = make_field(2, 4);
  Rng rng(7);
  const auto spec = random_projective_spec(f, 2, 2, 1, rng);

  const auto img = project_subgeometry(spec);
  std::cout << "projected points (weight):\n";
  for (const auto& [pt, w] : img.weights) std::cout << "  (" << pt[0].v << ' ' << pt[1].v << ")  " << w << '\n';
  std::cout << "total weight " << img.total() << " = " << projective_point_count(2, 3) << '\n';

  const auto u = realize_in_plane(spec);
  const auto d = directions_of(u);
  std::cout << "|U| = " << u.size() << ", D = " << d.to_string() << '\n';
  std::cout << (d == to_direction_set(f, img.support()) ? "directions match\n" : "directions differ\n");
  return 0;
}
