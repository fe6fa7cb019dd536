#include "doctest.h"

#include "oracles.hpp"

#include "dyckzeta/dyck_word.hpp"
#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"

#include <algorithm>

using namespace dyckzeta;

namespace {
const char* const kExample = "1110101100011000";
}

TEST_CASE("parse_word accepts the three alphabets") {
  CHECK(parse_word("10").str() == "10");
  CHECK(parse_word("10").semilength() == 1);
  const auto w = parse_word(kExample);
  CHECK(w.semilength() == 8);
  CHECK(w.str() == kExample);
  CHECK(parse_word("NNEE") == parse_word("1100"));
  CHECK(parse_word("uDuD") == parse_word("1010"));
  CHECK(parse_word("nNeE") == parse_word("1100"));
}

TEST_CASE("parse_word reports the first violation") {
  try {
    parse_word("1001");
    FAIL("expected BelowDiagonal");
  } catch (const BelowDiagonal& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse_word("10x0");
    FAIL("expected NonBinaryAlphabet");
  } catch (const NonBinaryAlphabet& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_word("110"), NotBalanced);
  CHECK_THROWS_AS(parse_word("1110"), NotBalanced);
  CHECK_THROWS_AS(parse_word("01"), BelowDiagonal);
  CHECK_THROWS_AS(parse_word(""), SemilengthOutOfRange);
  CHECK_THROWS_AS(parse_word(std::string(17, '1') + std::string(17, '0')), SemilengthOutOfRange);
  CHECK_NOTHROW(parse_word(std::string(16, '1') + std::string(16, '0')));
}

TEST_CASE("levels are post-step heights") {
  CHECK(levels(parse_word("10")).heights == std::vector<int>{1, 0});
  const auto lv = levels(parse_word(kExample));
  CHECK(lv.heights == std::vector<int>{1, 2, 3, 2, 3, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1, 0});
  CHECK(lv.at(0) == 0);
  CHECK(lv.max() == 4);
}

TEST_CASE("levels_raw handles non-Dyck sequences") {
  CHECK(levels_raw(parse_binary("0001100011010111")) ==
        std::vector<int>{-1, -2, -3, -2, -1, -2, -3, -4, -3, -2, -3, -2, -3, -2, -1, 0});
  CHECK(levels_raw(parse_binary("")).empty());
  CHECK(levels_raw(parse_binary("01")) == std::vector<int>{-1, 0});
}

TEST_CASE("area_sequence") {
  CHECK(area_sequence(parse_word("1010")).rows == std::vector<int>{0, 0});
  CHECK(area_sequence(parse_word("110100")).rows == std::vector<int>{0, 1, 1});
  const auto a = area_sequence(parse_word(kExample));
  CHECK(a.rows == std::vector<int>{0, 1, 2, 2, 2, 3, 1, 2});
  CHECK(a.sum() == oracle::cell_area(kExample));
}

TEST_CASE("peaks grouped by height") {
  auto p = peaks(parse_word("10"));
  CHECK(p.max_level == 1);
  CHECK(p.at_level(1) == std::vector<int>{1});

  p = peaks(parse_word(kExample));
  CHECK(p.max_level == 4);
  CHECK(p.by_level.size() == 2);
  CHECK(p.at_level(4) == std::vector<int>{8});
  CHECK(p.at_level(3) == std::vector<int>{3, 5, 13});

  p = peaks(parse_word("110100"));
  CHECK(p.max_level == 2);
  CHECK(p.at_level(2) == std::vector<int>{2, 4});
  CHECK(p.at_level(1).empty());
}

TEST_CASE("right steps") {
  const auto r = right_steps(parse_word(kExample));
  CHECK(r.positions() == std::vector<int>{4, 6, 9, 10, 11, 14, 15, 16});
  CHECK_FALSE(r.contains(1));
  CHECK(r.contains(16));
}

TEST_CASE("reverse and rev_complement") {
  CHECK(to_string(reverse(parse_word(kExample))) == "0001100011010111");
  CHECK(to_string(reverse(parse_word("10"))) == "01");
  CHECK(rev_complement(parse_word("10")).str() == "10");
  CHECK(rev_complement(parse_word("110100")).str() == "110100");
  CHECK(rev_complement(parse_word(kExample)).str() == "1110011100101000");
}

TEST_CASE("exhaustive structural properties for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& w : enumerate(n)) {
      const auto text = w.str();
      REQUIRE(parse_word(text) == w);

      const auto lv = levels(w);
      CHECK(lv.heights.back() == 0);
      CHECK(*std::min_element(lv.heights.begin(), lv.heights.end()) >= 0);
      const auto raw = levels_raw(reverse(w));
      for (int i = 1; i <= w.length(); ++i) REQUIRE(raw[static_cast<std::size_t>(i - 1)] == -lv.at(w.length() - i));

      auto rev = reverse(w);
      std::reverse(rev.begin(), rev.end());
      REQUIRE(rev == w.steps());

      REQUIRE(area_sequence(w).sum() == oracle::cell_area(text));
      REQUIRE(rev_complement(rev_complement(w)) == w);
      REQUIRE(rev_complement(w).str() == oracle::rc(text));
      REQUIRE(peaks(w).max_level == lv.max());
    }
  }
}

TEST_CASE("peak set invariants against an adjacency scan") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : enumerate(n)) {
      const auto p = peaks(w);
      const auto lv = levels(w);
      std::vector<int> listed;
      for (const auto& [level, positions] : p.by_level)
        for (int i : positions) {
          CHECK(w.step(i) == 1);
          CHECK(lv.at(i) == level);
          listed.push_back(i);
        }
      std::sort(listed.begin(), listed.end());
      std::vector<int> scanned;
      const auto text = w.str();
      for (std::size_t i = 0; i + 1 < text.size(); ++i)
        if (text[i] == '1' && text[i + 1] == '0') scanned.push_back(static_cast<int>(i + 1));
      REQUIRE(listed == scanned);
    }
}
