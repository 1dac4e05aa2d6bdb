#pragma once

namespace rotbraid {

/// The two homotopy classes of closed rotation paths; a group isomorphic to
/// Z_2 under composition.
enum class HomotopyClass { trivial, nontrivial };

inline HomotopyClass compose(HomotopyClass a, HomotopyClass b) {
  return a == b ? HomotopyClass::trivial : HomotopyClass::nontrivial;
}

inline const char* to_string(HomotopyClass c) {
  return c == HomotopyClass::trivial ? "trivial" : "nontrivial";
}

}  // namespace rotbraid
