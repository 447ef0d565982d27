#pragma once

// Worked-example matrices shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "mphide/matrix.hpp"

namespace mphide::fixtures {

inline ExactMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  return ExactMatrix::parse_rows(rows);
}

// Seed of the 2x2 worked example.
inline ExactMatrix seed() { return mat({{"1+4i", "3-2i"}, {"2-3i", "-1-5i"}}); }

// seed^17 and seed^11.
inline ExactMatrix c17() {
  return mat({{"-8229303833+96078379931i", "159011972369+193528618710i"},
              {"221214366306+117483350975i", "600042299893-104462213832i"}});
}
inline ExactMatrix d11() {
  return mat({{"-717135-7281379i", "-17385865-6190286i"},
              {"-18429370+972761i", "-31527077+28463112i"}});
}

// What (c17, d11) yield under the wrong exponents (17, 12).
inline ExactMatrix wrong_key_result() {
  return mat({{"5319+84141i", "-1142+119291i"}, {"44827+110554i", "288728+196979i"}});
}

// seed^19 and seed^13.
inline ExactMatrix c19() {
  return mat({{"513852777463-2298638980668i", "-2931007733267-5289191614510i"},
              {"-4739850067058-3755020054445i", "-14804380518615-191643568579i"}});
}
inline ExactMatrix d13() {
  return mat({{"14127153+166148948i", "378280035+217438622i"},
              {"432811810+55220253i", "881816207-535190869i"}});
}

}  // namespace mphide::fixtures
