#include <set>

#include "doctest.h"
#include "gridsign/errors.hpp"
#include "gridsign/io.hpp"
#include "testgrids.hpp"

using namespace gridsign;

namespace {

Errc code_of(const char* text) {
  try {
    parse_grid(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("parsing the 2x2 one-component grid") {
  const GridDiagram d = parse_grid(testgrids::unknot2_json());
  CHECK(d.n == 2);
  CHECK(d.m == 1);
  CHECK(d.o_col == std::vector<int>{0, 1});
  CHECK(d.x_col == std::vector<int>{1, 0});
  CHECK(d.x_component == std::vector<int>{0, 0});
}

TEST_CASE("grid parse errors") {
  CHECK(code_of(R"({"n": 2, "O": [1, 2], "X": [1, 2]})") == Errc::MarkingCollision);
  CHECK(code_of(R"({"n": 3, "O": [1, 2, 2], "X": [2, 3, 1]})") == Errc::NotPermutation);
  CHECK(code_of(R"({"n": 3, "O": [1, 2, 4], "X": [2, 3, 1]})") == Errc::NotPermutation);
  CHECK(code_of(R"({"n": 2, "O": [1, 2]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"n": 2, "O": [1, 2], "X": [2, 1], "extra": 0})") == Errc::MalformedInput);
  CHECK(code_of(R"({"n": 2, "O": [1, 2], "X": [2]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"n": 2, "O": [1, 2], "X": [2, 1.5]})") == Errc::MalformedInput);
  CHECK(code_of(R"(not json)") == Errc::MalformedInput);
  CHECK(code_of(R"([1, 2, 3])") == Errc::MalformedInput);
  CHECK(code_of(R"({"n": 0, "O": [], "X": []})") == Errc::MalformedInput);
}

TEST_CASE("component trace splits and joins correctly") {
  SUBCASE("one component on the 2x2 grid") {
    const auto [m, comp] = link_components({0, 1}, {1, 0});
    CHECK(m == 1);
    CHECK(comp == std::vector<int>{0, 0});
  }
  SUBCASE("two components on the split 4x4 grid") {
    const GridDiagram d = testgrids::split4();
    CHECK(d.m == 2);
    CHECK(d.x_component == std::vector<int>{0, 0, 1, 1});
  }
  SUBCASE("one component on the 5x5 cyclic grid") {
    const GridDiagram d = testgrids::trefoil5();
    CHECK(d.m == 1);
  }
  SUBCASE("two components on the block-free 4x4 grid") {
    CHECK(testgrids::blockfree4().m == 2);
  }
}

TEST_CASE("component map is surjective and ordered by smallest X index") {
  for (const GridDiagram& d :
       {testgrids::unknot2(), testgrids::unknot3(), testgrids::split4(), testgrids::trefoil5()}) {
    std::set<int> seen;
    int first_unseen = 0;
    for (int c : d.x_component) {
      CHECK(c >= 0);
      CHECK(c < d.m);
      // A new component index must be the next unused one.
      if (!seen.count(c)) {
        CHECK(c == first_unseen);
        ++first_unseen;
      }
      seen.insert(c);
    }
    CHECK(static_cast<int>(seen.size()) == d.m);
  }
}

TEST_CASE("grid json round trip") {
  const GridDiagram d = testgrids::trefoil5();
  const GridDiagram d2 = parse_grid(grid_to_json(d).dump());
  CHECK(d2.n == d.n);
  CHECK(d2.o_col == d.o_col);
  CHECK(d2.x_col == d.x_col);
  CHECK(d2.m == d.m);
}
