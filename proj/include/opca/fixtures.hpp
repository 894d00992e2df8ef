#pragma once

#include "opca/opas.hpp"

namespace opca {

// The stock structures used throughout the test and acceptance suites.
// ONE is the one-point OPCA; C2 and C3 are meet chains; V3 is the meet
// semilattice bot < a, bot < b. A2..F4 are order-only fixtures (no OPCA
// structure exists on them); N4 is the four-element zigzag and F4 a fork
// with an isolated point, both without a least element.

OpcaRef fixture_one();
OpcaRef fixture_c2();
OpcaRef fixture_c3();
OpcaRef fixture_v3();
std::vector<OpcaRef> fixture_opcas();  // ONE, C2, C3, V3

PosetRef fixture_a2();
PosetRef fixture_a3();
PosetRef fixture_a4();
PosetRef fixture_n4();
PosetRef fixture_f4();
std::vector<PosetRef> fixture_posets();  // A2, A3, A4, N4, F4

// Meet-semilattice table on a poset; every pair must have a meet.
AppTable meet_table(const FinPoset& p);

}  // namespace opca
