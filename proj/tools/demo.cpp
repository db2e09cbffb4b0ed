// Walk through the main objects for S_N^+ (category NC) at N = 4.
#include <iostream>

#include <particat/particat.hpp>

int main() {
  using namespace particat;
  const auto NC = CategorySpec::builtin(BuiltinCategory::NC);

  const Partition p1 = parse_partition("aab:accc");
  const auto s = stats(p1);
  std::cout << "p1 = " << p1.text() << "  b=" << s.b << " t=" << s.t << " beta=" << s.beta << "\n";
  const auto d = through_block_decomposition(p1);
  std::cout << "  q = " << d.lower_building.text() << "  r = " << d.middle.text()
            << "  s = " << d.upper_building.text() << "\n";

  std::cout << "u_1 (x) u_1 via X_C(|,|):\n";
  const Partition bar = Partition::identity(1);
  for (const auto& e : fusion(NC, bar, bar).entries)
    std::cout << "  " << e.partition.text() << "  t=" << e.t << "\n";

  std::cout << "u^(x)2 at N = 4:\n";
  const auto dec = class_projection(NC, 2, 4);
  for (const auto& c : dec.classes)
    std::cout << "  [" << c.representative.text() << "] t=" << c.t << " rank P_p=" << c.rank_p
              << " multiplicity=" << c.multiplicity << "\n";
  std::cout << "  total rank " << dec.total_rank << "\n";
}
