#include <random>
#include <set>

#include "doctest.h"
#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"
#include "weylphi/unipotent.hpp"

using namespace weylphi;

static GroupDescriptor G(Family f, int n) { return GroupDescriptor::make(f, n); }

TEST_CASE("gamma examples") {
  CHECK(gamma_from_partition({2, 1}, G(Family::C, 3), 0).to_string() == "(4,2)");
  CHECK(gamma_from_partition({2, 1}, G(Family::C, 3), 5).jordan == Partition{4, 2});
  CHECK(gamma_from_partition({2, 1}, G(Family::B, 3), 0).jordan == Partition{5, 1, 1});
  CHECK(gamma_from_partition({2, 1}, G(Family::B, 3), 2).to_string() == "(4*,2*,1)");
  CHECK(gamma_from_partition({2, 2}, G(Family::D, 4), 0).jordan == Partition{5, 3});
  CHECK(gamma_from_partition({2, 2}, G(Family::D, 4), 2).to_string() == "(4*,4*)");
  CHECK(gamma_from_partition({3}, G(Family::B, 3), 0).jordan == Partition{7});
  CHECK_THROWS(gamma_from_partition({2, 1, 1}, G(Family::D, 4), 0));
}

TEST_CASE("gamma gives valid Jordan types of the right size") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& p : partitions_of(n))
      for (Family f : {Family::B, Family::C, Family::D}) {
        if (f == Family::D && (p.size() % 2 || n < 3)) continue;
        auto g = G(f, n);
        auto u = gamma_from_partition(p, g, 0);
        REQUIRE(partition_size(u.jordan) == natural_dim(g));
        REQUIRE(is_classical_jordan_type(u.jordan, g));
        if (f == Family::D) REQUIRE(!is_very_even(u.jordan));
      }
}

TEST_CASE("label parsing round trip") {
  auto u = parse_unipotent_label("(4*,2?,1)", Family::B);
  CHECK(u.jordan == Partition{4, 2, 1});
  CHECK(u.flags == std::vector<FlagState>{FlagState::Holds, FlagState::NotAsserted, FlagState::None});
  CHECK(u.to_string() == "(4*,2?,1)");
  CHECK(parse_unipotent_label("4,2", Family::C).flags.empty());
  CHECK(parse_unipotent_label("F4(a3)", Family::F4).name == "F4(a3)");
}

TEST_CASE("dominance") {
  CHECK(dominance_leq({2, 2}, {4}));
  CHECK_FALSE(dominance_leq({4}, {2, 2}));
  CHECK(dominance_leq({2, 2}, {3, 1}));
  CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
  CHECK_THROWS(dominance_leq({3}, {2, 2}));
}

TEST_CASE("dominance is a partial order on random partitions") {
  std::mt19937 rng(7);
  for (int n = 4; n <= 12; ++n) {
    auto all = partitions_of(n);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      REQUIRE(dominance_leq(a, a));
      if (dominance_leq(a, b) && dominance_leq(b, a)) REQUIRE(a == b);
      if (dominance_leq(a, b) && dominance_leq(b, c)) REQUIRE(dominance_leq(a, c));
    }
  }
}

TEST_CASE("centralizer dimension in characteristic 2, type C") {
  CHECK(centralizer_dim_typeC_p2({4}) == 2);
  CHECK(centralizer_dim_typeC_p2({2, 2}) == 4);
  CHECK(centralizer_dim_typeC_p2({4, 2}) == 5);
  CHECK_THROWS(centralizer_dim_typeC_p2({3, 1}));
}

TEST_CASE("X = 2Y") {
  CHECK(check_X_equals_2Y({2}).X == 0);
  CHECK(check_X_equals_2Y({2, 1}).X == 2);
  CHECK(check_X_equals_2Y({2, 1}).Y == 1);
  auto r = check_X_equals_2Y({3, 3, 2});
  CHECK(r.X == 14);
  CHECK(r.Y == 7);
  for (int n = 1; n <= 14; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(check_X_equals_2Y(p).ok());
}

TEST_CASE("centralizer dimension equals d_C for elliptic classes") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      auto u = gamma_from_partition(p, GroupDescriptor{Family::C, n, 0}, 2);
      REQUIRE(centralizer_dim_typeC_p2(u.jordan) == d_C_classical(p, Family::C));
      // good characteristic formulas agree as well
      REQUIRE(centralizer_dim(u.jordan, GroupDescriptor{Family::C, n, 0}) == d_C_classical(p, Family::C));
      auto b = gamma_from_partition(p, GroupDescriptor{Family::B, n, 0}, 0);
      REQUIRE(centralizer_dim(b.jordan, GroupDescriptor{Family::B, n, 0}) == d_C_classical(p, Family::B));
      if (p.size() % 2 == 0 && n >= 2) {
        auto d = gamma_from_partition(p, GroupDescriptor{Family::D, n, 0}, 0);
        REQUIRE(centralizer_dim(d.jordan, GroupDescriptor{Family::D, n, 0}) == d_C_classical(p, Family::D));
      }
    }
}

TEST_CASE("phi_small_injection") {
  CHECK(phi_small_injection({3, 1}) == Partition{7, 1, 1});
  CHECK(phi_small_injection({2, 2}) == Partition{5, 3, 1});
  CHECK(phi_small_injection({4, 1}) == Partition{9, 1, 1});
  for (int n = 1; n <= 12; ++n) {
    std::set<Partition> plus, rest;
    for (const auto& p : partitions_of(n)) {
      auto v = phi_small_injection(p);
      REQUIRE(is_partition(v));
      REQUIRE(partition_size(v) == 2 * n + 1);
      auto& bucket = p.size() % 2 == 0 ? plus : rest;
      REQUIRE(bucket.insert(v).second);
    }
  }
}

TEST_CASE("distinguished classes") {
  auto sp6 = GroupDescriptor{Family::C, 3, 0};
  auto sp4 = GroupDescriptor{Family::C, 2, 0};
  CHECK(is_distinguished(UnipotentLabel{Family::C, {4, 2}, {}, ""}, sp6, 0));
  CHECK_FALSE(is_distinguished(UnipotentLabel{Family::C, {2, 2}, {}, ""}, sp4, 0));
  CHECK(is_distinguished(UnipotentLabel{Family::C, {2, 2}, {}, ""}, sp4, 2));
  auto f4 = GroupDescriptor::make(Family::F4);
  CHECK(is_distinguished(UnipotentLabel{Family::F4, {}, {}, "F4(a3)"}, f4, 0));
  CHECK_FALSE(is_distinguished(UnipotentLabel{Family::F4, {}, {}, "C3(a1)"}, f4, 0));
  CHECK(is_distinguished(UnipotentLabel{Family::F4, {}, {}, "C3(a1)"}, f4, 2));
  CHECK(is_distinguished(UnipotentLabel{Family::G2, {}, {}, "~A1"}, GroupDescriptor::make(Family::G2), 3));
  // every distinguished class in good characteristic is some gamma
  for (int n = 2; n <= 8; ++n)
    for (Family f : {Family::B, Family::C, Family::D}) {
      auto g = GroupDescriptor{f, n, 0};
      std::set<Partition> basic;
      for (const auto& p : partitions_of(n))
        if (f != Family::D || p.size() % 2 == 0) basic.insert(gamma_from_partition(p, g, 0).jordan);
      for (const auto& u : unipotent_classes(g, 0))
        if (is_distinguished(u, g, 0)) REQUIRE(basic.count(u.jordan));
    }
}

TEST_CASE("class lists") {
  CHECK(unipotent_classes(GroupDescriptor{Family::C, 2, 0}, 0).size() == 4);
  CHECK(unipotent_classes(GroupDescriptor{Family::B, 2, 0}, 0).size() == 4);
  CHECK(unipotent_classes(GroupDescriptor{Family::A, 2, 0}, 2).size() == 3);
  CHECK(unipotent_classes(GroupDescriptor::make(Family::G2), 0).size() == 5);
  CHECK(unipotent_classes(GroupDescriptor::make(Family::F4), 0).size() == 16);
  CHECK(unipotent_classes(GroupDescriptor::make(Family::E6), 0).size() == 21);
  CHECK_THROWS_AS(unipotent_classes(GroupDescriptor{Family::C, 2, 0}, 2), UnsupportedCase);
  // basic exceptional classes are on the lists
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    std::set<std::string> names;
    for (const auto& u : unipotent_classes(GroupDescriptor::make(f), 0)) names.insert(u.name);
    for (const auto& row : exceptional_table(f)) CHECK(names.count(row.name));
  }
}

TEST_CASE("Bala-Carter names of classical classes") {
  auto name = [](Partition l, char t, bool tilde = true) { return format_bala_carter(bala_carter_pieces(l, t, tilde)); };
  CHECK(name({4, 2}, 'C') == "C3(a1)");
  CHECK(name({6}, 'C') == "C3");
  CHECK(name({2, 2, 2}, 'C') == "A1+~A1");
  CHECK(name({3, 3}, 'C') == "~A2");
  CHECK(name({4, 1, 1}, 'C') == "B2");
  CHECK(name({7}, 'B') == "B3");
  CHECK(name({5, 1, 1}, 'B') == "B2");
  CHECK(name({3, 3, 1}, 'B') == "A2");
  CHECK(name({3, 1, 1, 1, 1}, 'B') == "~A1");
  CHECK(name({2, 2, 1, 1, 1}, 'B') == "A1");
  CHECK(name({5, 3}, 'D') == "D4(a1)");
  CHECK(name({7, 1}, 'D') == "D4");
  CHECK(name({3, 2, 2, 1}, 'D') == "3A1");
  CHECK(name({5, 1}, 'D') == "A3");
  CHECK(name({1, 1, 1}, 'B') == "1");
  CHECK(format_bala_carter({{'A', 2, false, 0}, {'A', 1, false, 0}, {'A', 2, false, 0}}) == "2A2+A1");
}
