// The B(H) + B(K) example with dim H = aleph_0 < dim K = aleph_1: a smaller
// projection can have a larger dimension when the central covers differ.

#include <iostream>

#include "awstar/dimension.hpp"

int main() {
  using namespace awstar;
  using namespace awstar::dimension;
  AtomicModel m({Cardinal::aleph(0), Cardinal::aleph(1)});
  auto one = CProjection::one(m);
  auto right = CProjection::with_range(m, {Cardinal::finite(0), Cardinal::aleph(1)});

  std::cout << "(0,1) <~ (1,1): " << std::boolalpha << subequiv(right, one) << "\n";
  std::cout << "d((1,1)) = " << dim_d(one) << "\n";
  std::cout << "d((0,1)) = " << dim_d(right) << "\n";
  for (const auto& piece : equidim_decomposition(one)) {
    std::cout << "piece on atoms {";
    for (std::size_t i = 0; i < piece.z.size(); ++i)
      if (piece.z[i]) std::cout << " " << i;
    std::cout << " } is " << piece.alpha << "-equidimensional\n";
  }
}
