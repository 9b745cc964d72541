// Re-derives the family wedges by search: every admissible ordering of bounce
// points along the two wedge sides is expanded, and exactly one must survive.

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dirac/kaleidoscope.hpp"

namespace dirac {
namespace {

// Bounce points on one side, listed from infinity toward the apex.
using SideList = std::vector<std::string>;

Side side_of(int k) { return k % 2 == 1 ? Side::Top : Side::Bottom; }

std::string pt(char beam, int k) { return std::string(1, beam) + std::to_string(k); }

WedgeSpec wedge_from(int j, const SideList& top, const SideList& bottom) {
  auto rank = [&](const std::string& p, int k) {
    const auto& list = side_of(k) == Side::Top ? top : bottom;
    return static_cast<std::int64_t>(std::find(list.begin(), list.end(), p) - list.begin()) + 1;
  };
  WedgeSpec w{6 * j + 2, {{"red", {}}, {"blue", {}}}};
  for (int k = 1; k <= 3 * j + 1; ++k) {
    w.beams[0].events.push_back({side_of(k), rank(pt('r', k), k)});
    const auto bp = (k % 3 == 0 && k / 3 <= j) ? pt('r', k / 3) : pt('b', k);
    w.beams[1].events.push_back({side_of(k), rank(bp, k)});
  }
  return w;
}

bool expands_validly(const WedgeSpec& w) {
  try {
    expand(w);
    return true;
  } catch (const ExpansionError&) {
    return false;
  }
}

struct State {
  SideList top, bottom;
};

TEST(FamilyDerivation, BaseCaseIsUnique) {
  SideList top{"b1", "r1", "r3"};
  SideList bottom{"b2", "b4", "r2", "r4"};
  std::sort(top.begin(), top.end());
  std::vector<State> found;
  int tried = 0;
  do {
    std::sort(bottom.begin(), bottom.end());
    do {
      ++tried;
      if (expands_validly(wedge_from(1, top, bottom))) found.push_back({top, bottom});
    } while (std::next_permutation(bottom.begin(), bottom.end()));
  } while (std::next_permutation(top.begin(), top.end()));
  EXPECT_EQ(tried, 144);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].top, (SideList{"b1", "r1", "r3"}));
  EXPECT_EQ(found[0].bottom, (SideList{"b2", "b4", "r2", "r4"}));
  EXPECT_EQ(wedge_from(1, found[0].top, found[0].bottom), family_wedge(1));
}

TEST(FamilyDerivation, InductionSlotsAreUnique) {
  State state{{"b1", "r1", "r3"}, {"b2", "b4", "r2", "r4"}};
  for (int j = 2; j <= 6; ++j) {
    State base = state;
    for (int k = 3 * j - 1; k <= 3 * j + 1; ++k)
      (side_of(k) == Side::Top ? base.top : base.bottom).push_back(pt('r', k));
    auto list_for = [](State& s, int k) -> SideList& {
      return side_of(k) == Side::Top ? s.top : s.bottom;
    };
    std::vector<State> found;
    const auto first = list_for(base, 3 * j - 1).size();
    for (std::size_t p1 = 0; p1 <= first; ++p1) {
      State a = base;
      auto& l1 = list_for(a, 3 * j - 1);
      l1.insert(l1.begin() + static_cast<std::ptrdiff_t>(p1), pt('b', 3 * j - 1));
      const auto second = list_for(a, 3 * j + 1).size();
      for (std::size_t p2 = 0; p2 <= second; ++p2) {
        State b = a;
        auto& l2 = list_for(b, 3 * j + 1);
        l2.insert(l2.begin() + static_cast<std::ptrdiff_t>(p2), pt('b', 3 * j + 1));
        if (expands_validly(wedge_from(j, b.top, b.bottom))) found.push_back(b);
      }
    }
    ASSERT_EQ(found.size(), 1u) << "j=" << j;
    state = found[0];
    // The new blue pair sits just outside red bounce j + 1.
    const auto& l = list_for(state, j + 1);
    const auto at = std::find(l.begin(), l.end(), pt('r', j + 1)) - l.begin();
    ASSERT_GE(at, 2);
    EXPECT_EQ(l[static_cast<std::size_t>(at - 2)], pt('b', 3 * j - 1));
    EXPECT_EQ(l[static_cast<std::size_t>(at - 1)], pt('b', 3 * j + 1));
    EXPECT_EQ(wedge_from(j, state.top, state.bottom), family_wedge(j)) << "j=" << j;
  }
}

}  // namespace
}  // namespace dirac
