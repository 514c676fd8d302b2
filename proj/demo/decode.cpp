// decode binary words against the layered tree sets and follow one chain.

#include <iomanip>
#include <iostream>

#include "cantor/cantor.hpp"

using namespace cantor;

int main() {
  std::cout << "placed words through length 5\n";
  for (std::uint64_t idx = 0; idx < (1u << 6) - 1; ++idx) {
    const Word u = psi_word(idx);
    const auto d = placed_decode(u);
    if (!d) continue;
    std::cout << "  " << std::setw(6) << word_str(u, 2) << "  t=("
              << word_str(d->t, kOmega) << ") sigma=" << d->sigma
              << " eps=" << static_cast<int>(d->eps) << " mirror="
              << word_str(mirror_word(u), 2) << "\n";
  }

  const Word t = parse_word("1,0", kOmega);
  const EpPoint x = canonical_point(t, 0);
  std::cout << "\ncanonical member of the (1,0) tree set: " << point_str(x) << "\n";
  std::cout << "witness chain:\n";
  for (const Word& w : witness_chain(x))
    std::cout << "  (" << word_str(w, kOmega) << ")\n";

  std::cout << "\nsection witness through stem 0010: "
            << point_str(density_witness_ht(parse_word("0", kOmega),
                                            parse_word("0010", 2)))
            << "\n";
  return 0;
}
