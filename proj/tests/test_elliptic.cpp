#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "weylphi/elliptic.hpp"
#include "weylphi/exceptional_data.hpp"

using namespace weylphi;

static WeylGroup group(Family f, int rank = 0, int kappa = 0) {
  return WeylGroup(GroupDescriptor::make(f, rank, kappa));
}

TEST_CASE("psi examples") {
  CHECK(psi({3, 1}) == std::vector<int>{1, -1});
  CHECK(psi({2, 2}) == std::vector<int>{1, -1});
  auto v = psi({2, 2, 1});
  CHECK(v[0] == 1);
  CHECK(std::accumulate(v.begin(), v.end(), 0) == 1);
}

TEST_CASE("psi invariants, n <= 14") {
  for (int n = 1; n <= 14; ++n)
    for (const auto& p : partitions_of(n)) {
      auto v = psi(p);
      REQUIRE(v[0] == 1);
      for (size_t a = 1; a + 1 < v.size(); a += 2) REQUIRE(v[a] + v[a + 1] == 0);
      REQUIRE(std::accumulate(v.begin(), v.end(), 0) == kappa_sigma(p));
    }
}

TEST_CASE("w_from_partition examples") {
  CHECK(w_from_partition({2}, 0).perm == std::vector<int>{2, 4, 1, 3});
  CHECK(w_from_partition({1, 1}, 0).perm == std::vector<int>{4, 3, 2, 1});
  CHECK(w_from_partition({1}, 1).perm == std::vector<int>{3, 2, 1});
}

TEST_CASE("w_p is elliptic with class (empty; p), and p -> class is a bijection") {
  for (int n = 2; n <= 9; ++n) {
    auto b = group(Family::B, n);
    auto b1 = group(Family::B, n, 1);
    for (const auto& p : partitions_of(n)) {
      auto w = w_from_partition(p, 0);
      b.validate(w);
      auto c = b.class_of(w);
      REQUIRE(c.alpha.empty());
      REQUIRE(c.beta == p);
      REQUIRE(b.char_poly(w).multiplicity(1) == 0);
      auto w1 = w_from_partition(p, 1);
      b1.validate(w1);
      REQUIRE(b1.class_of(w1).beta == p);
    }
  }
  for (int n = 2; n <= 6; ++n) {
    auto b = group(Family::B, n);
    std::set<std::string> from_partitions, elliptic;
    for (const auto& p : partitions_of(n)) from_partitions.insert(b.class_of(w_from_partition(p, 0)).to_string());
    for (const auto& c : b.enumeration().classes)
      if (c.elliptic) elliptic.insert(c.label.to_string());
    REQUIRE(from_partitions == elliptic);
  }
}

TEST_CASE("d_C_classical examples") {
  CHECK(d_C_classical({2}, Family::C) == 2);
  CHECK(d_C_classical({1, 1}, Family::C) == 4);
  CHECK(d_C_classical({2, 2}, Family::D) == 6);
  CHECK_THROWS(d_C_classical({2, 1, 1}, Family::D));
}

TEST_CASE("excellent decomposition examples") {
  auto a = excellent_decomposition({2}, Family::C, 'a');
  CHECK(a.blocks == std::vector<std::vector<int>>{{2}, {1}});
  auto b = excellent_decomposition({1, 1}, Family::C, 'a');
  CHECK(b.blocks == std::vector<std::vector<int>>{{2}, {1, 2, 1}});
  CHECK(b.letters() == 4);
  auto d = excellent_decomposition({2, 2}, Family::D);
  CHECK(d.blocks == std::vector<std::vector<int>>{{4, 2, 4}, {3}, {2}, {1}});
  CHECK(d.letters() == 6);
  CHECK_THROWS(excellent_decomposition({2, 1, 1}, Family::C, 'b'));
}

TEST_CASE("generated decompositions multiply to w_p^{-1} and are excellent") {
  for (int n = 2; n <= 6; ++n) {
    auto b = group(Family::C, n);
    auto d = group(Family::D, n);
    for (const auto& p : partitions_of(n)) {
      auto w = b.inverse(w_from_partition(p, 0));
      auto ra = validate_excellent(excellent_decomposition(p, Family::C, 'a'), w, b);
      INFO(to_string(p));
      REQUIRE(ra.ok);
      if (p.size() % 2) continue;
      auto rb = validate_excellent(excellent_decomposition(p, Family::C, 'b'), w, b);
      REQUIRE(rb.ok);
      REQUIRE(rb.letters == ra.letters);
      auto rd = validate_excellent(excellent_decomposition(p, Family::D), w, d);
      REQUIRE(rd.ok);
      REQUIRE(rd.letters == ra.letters - static_cast<int>(p.size()));
    }
  }
}

TEST_CASE("odd orthogonal realization gives the same words") {
  for (int n = 2; n <= 5; ++n) {
    auto b = group(Family::B, n, 1);
    for (const auto& p : partitions_of(n)) {
      auto w = b.inverse(w_from_partition(p, 1));
      REQUIRE(b.from_word(excellent_decomposition(p, Family::B, 'a').word()) == w);
    }
  }
}

TEST_CASE("exceptional excellent decompositions") {
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    auto w = group(f);
    std::set<std::string> hit;
    for (const auto& blocks : exceptional_excellent_words(f)) {
      ExcellentDecomposition dec{blocks};
      auto x = w.from_word(dec.word());
      auto r = validate_excellent(dec, x, w);
      INFO(dec.to_string());
      CHECK(r.ok);
      auto c = w.class_of(x);
      const auto& row = exceptional_lookup(f, c.sig, c.disc);
      CHECK(row.d == dec.letters());
      hit.insert(c.to_string());
    }
    CHECK(hit.size() == exceptional_table(f).size());
  }
}

TEST_CASE("scrambled word fails validation") {
  auto f4 = group(Family::F4);
  ExcellentDecomposition good{{{1}, {2, 3, 2}, {3}, {4}}};
  auto w = f4.from_word(good.word());
  CHECK(validate_excellent(good, w, f4).ok);
  CHECK(validate_excellent(good, w, f4).letters == 6);
  ExcellentDecomposition bad{{{1}, {2, 3, 2}, {3}, {4}, {4, 4, 4}}};
  auto r = validate_excellent(bad, w, f4);
  CHECK_FALSE(r.ok);
  ExcellentDecomposition g2{{{1}, {2}}};
  auto g = group(Family::G2);
  CHECK(validate_excellent(g2, g.from_word({1, 2}), g).ok);
}

TEST_CASE("an F4 minimal element without excellent decomposition") {
  auto f4 = group(Family::F4);
  auto x = f4.from_word({3, 2, 4, 3, 1, 2});
  CHECK(f4.length(x) == 6);
  auto c = f4.class_of(x);
  CHECK(c.sig.key() == "8");
  // every reduced word split into four odd palindromes fails
  const auto& en = f4.enumeration();
  std::vector<std::vector<int>> words{{}};
  // all reduced words via descents
  std::function<void(const WeylElement&, std::vector<int>&)> rec;
  std::set<std::vector<int>> reduced;
  rec = [&](const WeylElement& y, std::vector<int>& suffix) {
    int len = f4.length(y);
    if (len == 0) {
      reduced.insert(std::vector<int>(suffix.rbegin(), suffix.rend()));
      return;
    }
    for (int s = 1; s <= 4; ++s) {
      auto ys = f4.multiply(y, f4.generator(s));
      if (f4.length(ys) < len) {
        suffix.push_back(s);
        rec(ys, suffix);
        suffix.pop_back();
      }
    }
  };
  std::vector<int> suffix;
  rec(x, suffix);
  CHECK(!reduced.empty());
  (void)en;
  bool found = false;
  for (const auto& word : reduced) {
    // split 6 letters into 4 odd blocks: sizes {3,1,1,1} in some order
    for (int big = 0; big < 4 && !found; ++big) {
      std::vector<std::vector<int>> blocks;
      size_t pos = 0;
      bool ok = true;
      for (int k = 0; k < 4; ++k) {
        size_t len = k == big ? 3 : 1;
        std::vector<int> blk(word.begin() + pos, word.begin() + pos + len);
        pos += len;
        if (!std::equal(blk.begin(), blk.end(), blk.rbegin())) ok = false;
        blocks.push_back(blk);
      }
      if (ok) found = true;
    }
  }
  CHECK_FALSE(found);
}
