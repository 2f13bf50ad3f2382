#include "ratknot/gf_catalog.hpp"

#include <map>
#include <mutex>
#include <string>

namespace ratknot {

// Closed forms as data. Counts are up to mirror image unless the description
// says otherwise; x marks crossing number.
const std::vector<CatalogEntry>& gf_catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"fibonacci", "Fibonacci numbers F_0, F_1, ...", "1/(1 - x - x^2)"},

      {"fibered", "fibered knots",
       "-x^3 (1 + x) (x^4 + x^3 + x^2 - 1) / ((x^4 + 2x^3 + x^2 - 1) (x^4 + x^2 - 1))"},
      {"fibered_f1", "odd-length compositions into parts 1 and 2", "(x + x^2) / (1 - (x + x^2)^2)"},
      {"fibered_f2", "palindromic odd-length compositions into parts 1 and 2",
       "(x + x^2) / (1 - x^2 - x^4)"},

      {"positive", "positive knots", "(x^3 - 2x^5) / ((1 - 3x^2 + x^4) (1 - x^2 - x^4))"},

      {"u1", "unknotting number one knots",
       "x^3 + x^4 (x + 1) (2/(1 - 2x^2) + 1/(x^2 - 1)) + x^8/(x^4 - 1)"},
      {"u1_twist", "twist knots", "x^3 / (1 - x)"},
      {"u1_form1", "even words of the first unknotting shape, twist knots excluded",
       "2x^6 / ((1 - x^2 - 2x^4) (1 - x))"},
      {"u1_form2", "even words of the second unknotting shape",
       "2x^8 / ((1 - x^2 - 2x^4) (1 - x))"},
      {"u1_duplication", "knots whose even word has both shapes", "x^8 / (1 - x^4)"},
      {"non_counterexample", "unknotting number one knots that unknot in the even diagram",
       "(x^3 - x^5 + 2x^6 - 2x^7) / ((1 - x^2 - 2x^4) (1 - x))"},

      {"genus", "knots by crossing number (x) and genus (z)",
       "-(x^3 z (-1 + x^3 z + x^4 z + x^2 (1 + z))) / "
       "((1 + x) (1 + x^2) (-1 + 2x + x^2 (-1 + z)) (-1 + x^2 (1 + z)))"},
      {"genus_g", "compositions into 2g parts with the first part even, by sum (x) and g (z)",
       "x/(1 + x) (1/(1 - z x^2/(1 - x)^2) - 1)"},
      {"genus_h", "compositions into g parts with the first part even, by sum (x) and g (z)",
       "x/(1 + x) (1/(1 - z x/(1 - x)) - 1)"},
      {"genus_h1", "palindromic and antipalindromic even words by crossing number and genus",
       "(x + x^2)/(1 + x^2) (1/(1 - z x^2/(1 - x^2)) - 1)"},

      {"braid", "knots by crossing number (x) and braid index (z)",
       "-(x^3 z^2 (-1 - x z + 2x^4 z^2 + x^5 z^3 + x^2 (1 + z) + x^3 z (2 + z))) / "
       "((1 + x) (-1 + x + 2x^2 z) (-1 + x^2 + 2x^4 z^2))"},
      {"braid_g", "braid-index analogue of genus_g",
       "x z/(1 + x z) (1/(1 - ((1 + 1/(x z)) (1/(1 - x^2 z) - 1))^2) - 1)"},
      {"braid_h1", "braid-index analogue of genus_h1",
       "x z (1 + x z)/(1 + x^2 z^2) (1/(1 - (1 + 1/(x^2 z^2)) (1/(1 - x^4 z^2) - 1)) - 1)"},

      {"sigma_group", "one signature group: length in y, crossings in x, z marks the group",
       "y z x^2/(1 - x^2) (1/(1 - y x z/(1 - x^2)))"},

      {"G1", "knots by crossing number (x), 2g (y) and 2g + signature (z), mirrors counted separately",
       "-x^3 y^2 ("
       "  -1 - z^4 + x^8 z^2 (-1 + y^2 z^2)^2 (1 + y^2 z^2) - x (1 + z^2 + z^4)"
       "  + x^6 z^2 (1 + 2y^6 z^6 + 2y^2 (1 + z^4) - y^4 z^2 (2 + 3z^2 + 2z^4))"
       "  + x^7 z^2 (1 + y^6 z^6 + y^2 (1 + z^2 + z^4) - y^4 (z^2 + 3z^4 + z^6))"
       "  + x^2 (-z^2 + y^2 (1 + 4z^4 + z^8))"
       "  + x^3 (-z^2 + y^2 (1 + z^2 + 3z^4 + z^6 + z^8))"
       "  + x^5 (1 + z^2 + z^4 - y^4 z^4 (2 + z^2 + 2z^4) + y^2 (1 + 2z^2 + 2z^6 + z^8))"
       "  + x^4 (1 - z^2 + z^4 - 3y^4 (z^4 + z^8) + y^2 (1 + 2z^2 + z^4 + 2z^6 + z^8))"
       ") / ((1 + x) (1 + x^2)"
       "  (1 - x y (1 + z^2) + x^2 (-1 + y^2 z^2))"
       "  (1 + x y (1 + z^2) + x^2 (-1 + y^2 z^2))"
       "  (1 - x^2 y^2 (1 + z^4) + x^4 (-1 + y^4 z^4)))"},

      {"p_s", "determinants p_s with two u1 presentations", "(29 - 5x) / (1 - 6x + x^2)"},
      {"q_s", "achiral duplication determinants q_s", "(65 - 74x + 5x^2) / ((1 - x) (1 - 14x + x^2))"},
  };
  return entries;
}

RationalGF gf_catalog(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, RationalGF, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (auto& e : gf_catalog_entries())
    if (e.name == name) return cache.emplace(std::string(name), parse_gf(e.formula)).first->second;
  throw DomainError("unknown generating function '" + std::string(name) + "'");
}

}  // namespace ratknot
