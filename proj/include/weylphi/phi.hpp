#pragma once

#include <string>
#include <vector>

#include "weylphi/unipotent.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

// Elliptic classes only; E7 and E8 go through the table.
UnipotentLabel phi_elliptic(const ClassLabel& c, const WeylGroup& w, int charp);

// All classes. Classical groups use the Levi rule (each GL_a factor adds a
// pair of blocks a, a); G2, F4 and E6 descend to the smallest parabolic
// subgroup meeting C in one elliptic class.
UnipotentLabel phi_full(const ClassLabel& c, const WeylGroup& w, int charp);

// Exceptional descent through a given parabolic (for checking that the
// answer does not depend on J).
UnipotentLabel phi_via_parabolic(const ClassLabel& c, const WeylGroup& w, int charp,
                                 const ParabolicIntersection& par);

ClassLabel phi_inverse_basic(const UnipotentLabel& u, const WeylGroup& w, int charp);

// Every conjugacy class of W: bipartitions for B/C/D (type D split classes
// appear twice), partitions for A, the enumeration for G2/F4/E6 and the
// elliptic table for E7/E8.
std::vector<ClassLabel> all_class_labels(const WeylGroup& w);

struct PhiRow {
  ClassLabel c;
  bool elliptic = false;
  bool supported = true;
  UnipotentLabel image;
  std::string note;
};

struct SurjectivityReport {
  std::string group;
  int charp = 0;
  std::vector<PhiRow> rows;
  std::vector<UnipotentLabel> classes;
  std::vector<UnipotentLabel> missing;
  // very even classes of type D (their preimages are split classes)
  std::vector<UnipotentLabel> skipped;
  // images that are not on the class list (would signal a labeling bug)
  std::vector<UnipotentLabel> unknown;
  bool ok() const { return missing.empty() && unknown.empty(); }
};

SurjectivityReport phi_surjectivity_report(const WeylGroup& w, int charp);

}  // namespace weylphi
