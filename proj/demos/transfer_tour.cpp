// Builds V_n from L for n = 1..5 and prints the invariants that tell them apart.
#include <iomanip>
#include <iostream>

#include "hlat/roots.hpp"

int main() {
  using namespace hlat;
  const auto L = build_L();
  std::cout << "det L = " << to_string(form_det(L)) << "\n\n";
  std::cout << " n  rank  min char  defect      mu  roots                 identified\n";
  for (Int n = 1; n <= 5; ++n) {
    const auto g = transfer_gram(L, n);
    const auto cr = min_characteristic(g);
    const auto rs = root_system(g);
    std::cout << std::setw(2) << n << std::setw(6) << g.rank() << std::setw(10) << cr.min_norm << std::setw(8)
              << cr.defect << std::setw(8) << cr.mu << "  " << std::left << std::setw(22) << rs.label() << identify(g)
              << std::right << '\n';
  }
  const auto f = fingerprint(gamma_gram(12));
  std::cout << "\nGamma12 for comparison: defect " << f.defect << ", mu " << f.mu << ", roots "
            << f.root_system.label() << '\n';
}
