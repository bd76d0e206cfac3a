#include <set>

#include "doctest.h"
#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"
#include "weylphi/phi.hpp"

using namespace weylphi;

static WeylGroup group(Family f, int rank = 0) { return WeylGroup(GroupDescriptor::make(f, rank)); }

static std::string phi_str(const WeylGroup& w, const std::string& label, int p = 0) {
  return phi_full(parse_class_label(label, w.descriptor()), w, p).to_string();
}

TEST_CASE("phi on elliptic classes") {
  auto c2 = group(Family::C, 2);
  CHECK(phi_elliptic(parse_class_label("[];[2]", c2.descriptor()), c2, 0).to_string() == "(4)");
  CHECK(phi_elliptic(parse_class_label("[];[1,1]", c2.descriptor()), c2, 0).to_string() == "(2,2)");
  CHECK_THROWS(phi_elliptic(parse_class_label("[1];[1]", c2.descriptor()), c2, 0));
  auto e6 = group(Family::E6);
  CHECK(phi_elliptic(parse_class_label("E6:9", e6.descriptor()), e6, 0).name == "E6(a1)");
  auto e8 = group(Family::E8);
  CHECK(phi_elliptic(parse_class_label("E8:15", e8.descriptor()), e8, 0).name == "D8");
}

TEST_CASE("phi_full, classical rule") {
  auto c2 = group(Family::C, 2);
  CHECK(phi_str(c2, "[2];[]") == "(2,2)");
  CHECK(phi_str(c2, "[1];[1]") == "(2,1,1)");
  CHECK(phi_str(c2, "[1,1];[]") == "(1,1,1,1)");
  CHECK(phi_str(c2, "[1];[1]", 2) == "(2*,1?,1?)");
  auto b3 = group(Family::B, 3);
  CHECK(phi_str(b3, "[1,1,1];[]") == "(1,1,1,1,1,1,1)");
  CHECK(phi_str(b3, "[2];[1]") == "(3,2,2)");
  auto c3 = group(Family::C, 3);
  CHECK(phi_str(c3, "[];[2,1]") == "(4,2)");
  auto d4 = group(Family::D, 4);
  CHECK_THROWS_AS(phi_str(d4, "[2,2];[]"), UnsupportedCase);
  CHECK(phi_str(d4, "[3,1];[]") == "(3,3,1,1)");
  auto a2 = group(Family::A, 2);
  CHECK(phi_str(a2, "[2,1]") == "(2,1)");
}

TEST_CASE("phi_full agrees with phi_elliptic on elliptic classes") {
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 2; n <= 7; ++n) {
      if (f == Family::D && n < 4) continue;
      auto w = group(f, n);
      for (const auto& c : all_class_labels(w))
        if (c.alpha.empty() && !c.beta.empty())
          for (int p : {0, 2}) REQUIRE(phi_full(c, w, p) == phi_elliptic(c, w, p));
    }
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    auto w = group(f);
    for (const auto& cc : w.enumeration().classes)
      if (cc.elliptic) CHECK(phi_full(cc.label, w, 0) == phi_elliptic(cc.label, w, 0));
  }
}

TEST_CASE("elliptic classes are sent injectively") {
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 2; n <= 10; ++n) {
      auto w = WeylGroup(GroupDescriptor{f, n, 0});
      for (int p : {0, 2}) {
        std::set<UnipotentLabel> seen;
        for (const auto& part : partitions_of(n)) {
          if (f == Family::D && part.size() % 2) continue;
          ClassLabel c{f, {}, part, 0, {}, ""};
          REQUIRE(seen.insert(phi_elliptic(c, w, p)).second);
        }
      }
    }
}

TEST_CASE("phi_inverse_basic") {
  auto c3 = group(Family::C, 3);
  CHECK(phi_inverse_basic(UnipotentLabel{Family::C, {4, 2}, {}, ""}, c3, 0).to_string() == "[];[2,1]");
  auto b4 = group(Family::B, 4);
  CHECK(phi_inverse_basic(UnipotentLabel{Family::B, {5, 3, 1}, {}, ""}, b4, 0).to_string() == "[];[2,2]");
  auto g2 = group(Family::G2);
  auto c = phi_inverse_basic(UnipotentLabel{Family::G2, {}, {}, "G2(a1)"}, g2, 0);
  CHECK(c.sig.key() == "3");
  CHECK_THROWS(phi_inverse_basic(UnipotentLabel{Family::C, {2, 2, 1, 1}, {}, ""}, c3, 0));
  for (int n = 2; n <= 7; ++n)
    for (Family f : {Family::B, Family::C}) {
      auto w = WeylGroup(GroupDescriptor{f, n, 0});
      for (const auto& p : partitions_of(n)) {
        ClassLabel c{f, {}, p, 0, {}, ""};
        REQUIRE(phi_inverse_basic(phi_elliptic(c, w, 0), w, 0) == c);
      }
    }
}

TEST_CASE("surjectivity, classical and type A") {
  auto r = phi_surjectivity_report(group(Family::C, 2), 0);
  CHECK(r.rows.size() == 5);
  CHECK(r.classes.size() == 4);
  CHECK(r.ok());
  auto a = phi_surjectivity_report(group(Family::A, 2), 0);
  CHECK(a.rows.size() == 3);
  CHECK(a.ok());
  for (int n = 2; n <= 8; ++n)
    for (Family f : {Family::B, Family::C, Family::D}) {
      if (f == Family::D && n < 4) continue;
      auto rep = phi_surjectivity_report(WeylGroup(GroupDescriptor{f, n, 0}), 0);
      INFO(rep.group);
      CHECK(rep.ok());
      if (f != Family::D) CHECK(rep.skipped.empty());
    }
}

TEST_CASE("surjectivity, exceptional") {
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    auto w = group(f);
    auto rep = phi_surjectivity_report(w, 0);
    INFO(rep.group);
    for (const auto& u : rep.missing) MESSAGE("missing ", u.name);
    for (const auto& u : rep.unknown) MESSAGE("unknown ", u.name);
    CHECK(rep.ok());
  }
}

TEST_CASE("exceptional descent does not depend on J") {
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    auto w = group(f);
    for (const auto& cc : w.enumeration().classes) {
      if (cc.elliptic) continue;
      auto all = all_minimal_parabolics(cc.label, w);
      REQUIRE(!all.empty());
      auto first = phi_via_parabolic(cc.label, w, 0, all.front());
      for (const auto& par : all) CHECK(phi_via_parabolic(cc.label, w, 0, par) == first);
    }
  }
}

TEST_CASE("exceptional descent examples") {
  auto g2 = group(Family::G2);
  CHECK(phi_full(g2.class_of(g2.generator(1)), g2, 0).name == "~A1");
  CHECK(phi_full(g2.class_of(g2.generator(2)), g2, 0).name == "A1");
  CHECK(phi_full(g2.class_of(g2.identity()), g2, 0).name == "1");
  auto f4 = group(Family::F4);
  CHECK(phi_full(f4.class_of(f4.from_word({1, 2, 3})), f4, 0).name == "B3");
  CHECK(phi_full(f4.class_of(f4.from_word({2, 3, 4})), f4, 0).name == "C3");
  CHECK(phi_full(f4.class_of(f4.from_word({1, 3})), f4, 0).name == "A1+~A1");
  auto e7 = group(Family::E7);
  CHECK_THROWS_AS(phi_full(e7.class_of(e7.generator(1)), e7, 0), UnsupportedCase);
}
