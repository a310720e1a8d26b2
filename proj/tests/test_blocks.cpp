#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "blockcore/blocks.hpp"

using namespace blockcore;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
BarPartition B(std::initializer_list<int> parts) { return BarPartition(std::vector<int>(parts)); }

const Partition* ordinary_core(const BlockDescriptor& b) {
  return std::get_if<Partition>(&b.core);
}
const BarPartition* bar_core(const BlockDescriptor& b) {
  return std::get_if<BarPartition>(&b.core);
}

}  // namespace

TEST_CASE("defect_Sn") {
  CHECK(defect_Sn(3, 1) == 1);
  CHECK(defect_Sn(5, 0) == 0);
  CHECK(defect_Sn(7, 0) == 0);
  CHECK(defect_Sn(3, 3) == 4);
  CHECK(defect_Sn(5, 5) == 6);
  CHECK_THROWS_AS(defect_Sn(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(defect_Sn(3, -1), std::invalid_argument);
}

TEST_CASE("blocks_Sn for S_5 at p = 5") {
  const auto blocks = blocks_Sn(5, 5);
  int weight_one = 0;
  int weight_zero = 0;
  for (const auto& b : blocks) {
    CHECK(b.family == Family::Sn);
    REQUIRE(ordinary_core(b) != nullptr);
    CHECK(ordinary_core(b)->size() + 5LL * b.weight == 5);
    if (b.weight == 1) {
      ++weight_one;
      CHECK(*ordinary_core(b) == Partition{});
      CHECK(*b.l == 4);
      CHECK(*b.defect == 1);
    }
    if (b.weight == 0) {
      ++weight_zero;
      CHECK(*b.l == 1);
      CHECK(*b.defect == 0);
    }
  }
  CHECK(weight_one == 1);
  CHECK(weight_zero == static_cast<int>(enumerate_p_cores(5, 5).size()));
  CHECK(weight_zero == 2);
}

TEST_CASE("blocks_Sn edge cases and validation") {
  const auto one = blocks_Sn(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(*ordinary_core(one[0]) == P({1}));
  CHECK(one[0].weight == 0);
  CHECK(*one[0].defect == 0);

  CHECK_THROWS_AS(blocks_Sn(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(blocks_Sn(5, 9), std::invalid_argument);
  CHECK_THROWS_AS(blocks_Sn(0, 3), std::invalid_argument);
}

TEST_CASE("every partition of n lies in exactly one block of S_n") {
  for (int p : {3, 5, 7}) {
    for (int n = 1; n <= 40; ++n) {
      Bigint total = 0;
      for (const auto& b : blocks_Sn(n, p)) total += k(p, b.weight);
      CHECK(total == partition_count(n));
    }
  }
}

TEST_CASE("blocks_An at p = 3 around the first Alt-1 hit") {
  const auto a8 = blocks_An(8, 3);
  int found = 0;
  for (const auto& b : a8) {
    if (b.weight == 1 && b.self_conjugate) {
      ++found;
      CHECK(*ordinary_core(b) == P({3, 1, 1}));
      CHECK(*b.l == 1);
      CHECK(*b.defect == 1);
    }
  }
  CHECK(found == 1);

  for (const auto& b : blocks_An(5, 3))
    CHECK_FALSE((b.weight == 1 && b.self_conjugate));

  CHECK_THROWS_AS(blocks_An(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(blocks_An(8, 4), std::invalid_argument);
}

TEST_CASE("blocks_An never lists a core next to its conjugate") {
  for (int p : {3, 5}) {
    for (int n = 5; n <= 15; ++n) {
      std::set<std::vector<int>> seen;
      for (const auto& b : blocks_An(n, p)) {
        const Partition& mu = *ordinary_core(b);
        if (!is_self_conjugate(mu)) CHECK(seen.count(conjugate(mu).parts()) == 0);
        seen.insert(mu.parts());
      }
      // every conjugation pair of p-cores is represented exactly once
      for (int w = 0; p * w <= n; ++w)
        for (const Partition& mu : enumerate_p_cores(n - p * w, p)) {
          const std::size_t hits =
              is_self_conjugate(mu)
                  ? seen.count(mu.parts())
                  : seen.count(mu.parts()) + seen.count(conjugate(mu).parts());
          CHECK(hits == 1);
        }
    }
  }
}

TEST_CASE("blocks_An at p = 2") {
  const auto a8 = blocks_An(8, 2);
  for (const auto& b : a8) {
    CHECK(b.self_conjugate);
    if (b.weight >= 2) CHECK(*b.l >= 3);
    if (b.weight <= 1) {
      REQUIRE(b.defect.has_value());
      CHECK(*b.defect == 0);
    } else {
      CHECK_FALSE(b.defect.has_value());
    }
  }
  // 2-cores of 8-2w exist for w = 1 (size 6) and w = 4 (size 0)
  REQUIRE(a8.size() == 2);
  CHECK(a8[0].weight == 1);
  CHECK(*ordinary_core(a8[0]) == P({3, 2, 1}));
  CHECK(*a8[0].l == 1);
  CHECK(a8[1].weight == 4);
  CHECK(*a8[1].l == 7);
}

TEST_CASE("spin_blocks_An") {
  const auto s18 = spin_blocks_An(18, 3);
  int weight_one = 0;
  for (const auto& b : s18) {
    CHECK(b.family == Family::SpinAn);
    if (b.weight == 1) {
      ++weight_one;
      CHECK(*bar_core(b) == B({8, 5, 2}));
      CHECK(*b.sign == 1);
      CHECK(*b.l == 1);
      CHECK(*b.defect == 1);
    }
  }
  CHECK(weight_one == 1);

  const auto s5 = spin_blocks_An(5, 3);
  weight_one = 0;
  for (const auto& b : s5) {
    if (b.weight == 1) {
      ++weight_one;
      CHECK(*bar_core(b) == B({2}));
      CHECK(*b.sign == -1);
      CHECK(*b.l == 2);
    }
    if (b.weight == 0) CHECK(*b.defect == 0);
    if (b.weight > 1) CHECK_FALSE(b.l.has_value());
  }
  CHECK(weight_one == 1);

  for (const auto& b : spin_blocks_An(6, 3)) CHECK(b.weight != 1);

  CHECK_THROWS_AS(spin_blocks_An(10, 5), std::invalid_argument);
  CHECK_THROWS_AS(spin_blocks_An(4, 3), std::invalid_argument);
}

TEST_CASE("classify_single_orbit") {
  const auto h8 = classify_single_orbit(8, 3);
  int alt1 = 0, spin2 = 0;
  for (const auto& h : h8) {
    if (h.case_id == CaseId::Alt1) {
      ++alt1;
      CHECK(h.group == "A_8");
      CHECK(*h.core == "3,1,1");
      CHECK(h.l == 1);
      CHECK(h.defect == 1);
      CHECK(*h.weight == 1);
    }
    if (h.case_id == CaseId::Spin2) {
      ++spin2;
      CHECK(h.group == "2.A_8");
      CHECK(*h.core == "4,1");
      CHECK(*h.sign == -1);
      CHECK(h.l == 2);
    }
  }
  CHECK(alt1 == 1);
  CHECK(spin2 == 1);

  CHECK(classify_single_orbit(9, 3).empty());
  CHECK(classify_single_orbit(8, 5).empty());
  CHECK(classify_single_orbit(8, 2).empty());

  const auto h6 = classify_single_orbit(6, 5);
  REQUIRE(h6.size() == 2);
  CHECK(h6[0].case_id == CaseId::SpinA6_3);
  CHECK(h6[0].group == "2.A_6");
  CHECK(h6[0].l == 2);
  CHECK(h6[0].degrees == std::vector<long long>{4, 4});
  CHECK(h6[0].defect == 1);
  CHECK(h6[0].multiplicity == 1);
  CHECK(h6[1].case_id == CaseId::SpinA6_4);
  CHECK(h6[1].group == "6.A_6");
  CHECK(h6[1].l == 2);
  CHECK(h6[1].degrees == std::vector<long long>{6, 6});
  CHECK(h6[1].multiplicity == 2);

  CHECK_THROWS_AS(classify_single_orbit(4, 3), std::invalid_argument);
}

TEST_CASE("first_occurrences") {
  CHECK(first_occurrences(CaseId::Alt1, 30) == std::vector<int>{8, 11, 19, 24});
  CHECK(first_occurrences(CaseId::Spin2, 18) == std::vector<int>{5, 8, 10, 15, 18});
  CHECK(first_occurrences(CaseId::Alt1, 7).empty());
  CHECK(first_occurrences(CaseId::SpinA6_3, 10) == std::vector<int>{6});

  CHECK(first_occurrences(CaseId::Alt1, 30, 4) == first_occurrences(CaseId::Alt1, 30));
  CHECK(first_occurrences(CaseId::Spin2, 25, 3) == first_occurrences(CaseId::Spin2, 25));

  CHECK_THROWS_AS(first_occurrences(CaseId::Alt1, 4), std::invalid_argument);
  CHECK_THROWS_AS(first_occurrences(CaseId::Sporadic, 30), std::invalid_argument);
}

TEST_CASE("hits coincide with the independent core filters") {
  for (int n = 5; n <= 40; ++n) {
    const auto hits = classify_single_orbit(n, 3);
    const bool has_alt1 = std::any_of(hits.begin(), hits.end(), [](const auto& h) {
      return h.case_id == CaseId::Alt1;
    });
    const bool has_spin2 = std::any_of(hits.begin(), hits.end(), [](const auto& h) {
      return h.case_id == CaseId::Spin2;
    });
    CHECK(has_alt1 == !enumerate_self_conjugate_p_cores(n - 3, 3).empty());
    CHECK(has_spin2 == !enumerate_bar_cores(n - 3, 3).empty());
  }
}

TEST_CASE("among spin hits up to n = 24, l = 1 occurs only at n = 18") {
  for (int n = 5; n <= 24; ++n)
    for (const auto& h : classify_single_orbit(n, 3)) {
      if (h.case_id != CaseId::Spin2) continue;
      CHECK((h.l == 1) == (n == 18));
      CHECK(h.defect == 1);
    }
}
