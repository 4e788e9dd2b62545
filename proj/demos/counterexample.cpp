// Walks through the Z/2 x Z/2 counterexample over F_5 with the library API.
#include <iostream>

#include <nlohmann/json.hpp>

#include "kassembly/kassembly.hpp"

int main() {
  const kas::FiniteGroup g = kas::direct_product(kas::cyclic_group(2), kas::cyclic_group(2));
  const kas::PrimePower field = kas::validate_prime_power(5);

  std::cout << "H_2(" << g.name() << "; Z) = " << kas::integral_homology(g, 2) << '\n';
  std::cout << "F_5[G] semisimple: " << std::boolalpha << kas::is_semisimple(g, field) << '\n';
  std::cout << "simple components d = " << kas::component_count(g, field) << '\n';
  std::cout << "K_0(F_5 G) = " << *kas::k_group_ring(g, field, 0) << '\n';
  std::cout << "K_2(F_5 G) = " << *kas::k_group_ring(g, field, 2) << '\n';

  const auto cert = kas::certify_noninjectivity(g, field);
  std::cout << nlohmann::ordered_json(cert).dump(2) << '\n';
  return cert.verdict() == kas::Verdict::NotInjective ? 0 : 2;
}
