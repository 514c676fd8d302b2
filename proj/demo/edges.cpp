// walk the dense-family level graph and certify one edge per cylinder.

#include <iostream>

#include "cantor/cantor.hpp"

using namespace cantor;

int main() {
  const LevelGraph g = g0_level_graph(3);
  std::cout << "level 3 spanning tree (" << g.edges.size() << " edges)\n";
  for (const auto& e : g.edges) std::cout << "  " << e[0] << " -- " << e[1] << "\n";

  std::cout << "\nedges through each cylinder of depth 2\n";
  for (std::uint64_t idx = 0; idx < 7; ++idx) {
    const Word u = psi_word(idx);
    std::uint64_t n = u.size();
    while (true) {
      bool match = true;
      for (std::size_t j = 0; j < u.size() && match; ++j) match = (w_bit(n, j) == u[j]);
      if (match) break;
      ++n;
    }
    Word px = s_word(n);
    px.push_back(0u);
    Word py = s_word(n);
    py.push_back(1u);
    const EpPoint x = ep_point(2, px, {0u});
    const EpPoint y = ep_point(2, py, {0u});
    std::cout << "  [" << word_str(u, 2) << "] " << point_str(x) << " -- "
              << point_str(y) << " at level " << *g0_is_edge(x, y) << "\n";
  }

  std::cout << "\nrecurrence witnesses\n";
  for (const char* stem : {"0", "10", "110"}) {
    const EpPoint w = density_witness_x3(parse_word(stem, 2));
    std::cout << "  [" << stem << "] " << point_str(w) << " -> "
              << (x3_member(w).verdict == X3Result::Verdict::IN ? "IN" : "?") << "\n";
  }
  return 0;
}
