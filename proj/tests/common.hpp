#pragma once

#include "qbundle/presets.hpp"

// Presets are built once per test binary.
inline const qb::Bundle& hopf_bundle() {
  static const qb::Bundle b = qb::podles_line(1);
  return b;
}

inline const qb::Bundle& trivial_bundle() {
  static const qb::Bundle b = qb::trivial_base("u");
  return b;
}

inline const qb::Presentation& suq2() { return hopf_bundle().doc.algebra("suq2"); }
inline const qb::Presentation& u1() { return hopf_bundle().doc.algebra("u1"); }
inline const qb::HopfAlgebra& suq2_hopf() { return *hopf_bundle().doc.hopf_of("suq2"); }
inline const qb::HopfAlgebra& u1_hopf() { return *hopf_bundle().doc.hopf_of("u1"); }

inline qb::NCPoly P(const char* s) { return suq2().parse(s); }
inline qb::NCPoly U(const char* s) { return u1().parse(s); }
