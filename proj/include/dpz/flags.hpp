#pragma once

#include <string>

namespace dpz {

// Tri-state logic for pathology detection: a flag can be positively
// established, positively excluded, or undecidable from lattice data alone.
enum class Tri { yes, no, unknown };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

enum class FlagSource { asserted, sporadic_list, derived_ffcover };

inline const char* flag_source_name(FlagSource s) {
  switch (s) {
    case FlagSource::asserted: return "asserted";
    case FlagSource::sporadic_list: return "sporadic_list";
    default: return "derived_ffcover";
  }
}

// Pathology types of weak del Pezzo surfaces in small characteristic:
//   type1: quasi-elliptic anticanonical pencil (degree 1, char 2 or 3)
//   type2: inseparable anticanonical double cover (degree 2, char 2)
//   type3: inseparable bianticanonical map (degree 1, char 2)
struct PathologyFlags {
  Tri type1 = Tri::no;
  Tri type2 = Tri::no;
  Tri type3 = Tri::no;
  FlagSource source = FlagSource::asserted;
};

}  // namespace dpz
