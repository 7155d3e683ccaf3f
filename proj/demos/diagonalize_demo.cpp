// Diagonalizes a commuting pair in M_2(M_2(C) + C) and prints the residuals.

#include <iostream>

#include "awstar/diag.hpp"
#include "awstar/gen.hpp"

int main() {
  using namespace awstar;
  gen::Rng rng(2024);
  fdalg::AlgebraShape base{2, 1};
  auto inst = gen::commuting_family(rng, base, 2, 2);

  auto r = diag::simultaneous_diagonalize(base, 2, inst.family);
  std::cout << "unitarity defect " << r.unitarity_defect << "\n";
  for (std::size_t i = 0; i < r.members.size(); ++i)
    std::cout << "member " << i << ": off-diagonal " << r.members[i].off_diagonal
              << ", round trip " << r.members[i].roundtrip << "\n";
  std::cout << "u x_0 u* block 0:\n" << r.diagonalized[0].block(0).real() << "\n";
}
