// Prints the first few solutions of x^2 - (a^2+2a) y^2 = 1 and = 4 next to
// the continued fraction they come from, for a handful of a.

#include <iostream>

#include "pellcf/pellcf.hpp"

int main() {
  using namespace pellcf;
  for (int a = 1; a <= 5; ++a) {
    const FamilyParam fam{BigInt(a)};
    const CFExpansion cf = family_cf(fam);
    std::cout << "d=" << fam.d() << "  sqrt(d)=[" << cf.a0 << "; (" << cf.period[0] << "," << cf.period[1]
              << ")]\n";
    for (std::uint64_t n = 1; n <= 4; ++n) {
      std::cout << "  n=" << n << "  N=1: " << family_nth_unit_lucas(fam, n).str()
                << "  N=4: " << family_nth_four(fam, n).str() << "\n";
    }
  }
}
