#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "skein/chords.hpp"
#include "skein/errors.hpp"

using namespace skein;

namespace {

// Smallest rotation of a partner array, rotations written out by hand.
std::vector<int> min_rotation(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size());
  std::vector<int> best;
  for (int k = 0; k < n; ++k) {
    std::vector<int> r(partner.size());
    for (int p = 0; p < n; ++p) r[static_cast<std::size_t>((p + k) % n)] = (partner[static_cast<std::size_t>(p)] + k) % n;
    if (best.empty() || r < best) best = r;
  }
  return best;
}

std::map<std::vector<int>, long> lifts_by_odometer(const std::vector<int>& partner, int m) {
  const int points = static_cast<int>(partner.size());
  std::map<std::vector<int>, long> out;
  std::vector<int> sheet(static_cast<std::size_t>(points), 0);
  while (true) {
    std::vector<int> order(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p) order[static_cast<std::size_t>(p)] = p;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(sheet[static_cast<std::size_t>(a)], a) < std::pair(sheet[static_cast<std::size_t>(b)], b);
    });
    std::vector<int> where(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) where[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> lifted(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p) {
      lifted[static_cast<std::size_t>(where[static_cast<std::size_t>(p)])] =
          where[static_cast<std::size_t>(partner[static_cast<std::size_t>(p)])];
    }
    ++out[min_rotation(lifted)];
    int k = 0;
    while (k < points && ++sheet[static_cast<std::size_t>(k)] == m) sheet[static_cast<std::size_t>(k++)] = 0;
    if (k == points) break;
  }
  return out;
}

std::vector<ChordDiagram> all_diagrams(int n) {
  std::set<ChordDiagram> found;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::function<void()> go = [&] {
    auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      found.insert(ChordDiagram(partner));
      return;
    }
    const auto p = static_cast<std::size_t>(it - partner.begin());
    for (std::size_t q = p + 1; q < partner.size(); ++q) {
      if (partner[q] != -1) continue;
      partner[p] = static_cast<int>(q);
      partner[q] = static_cast<int>(p);
      go();
      partner[p] = partner[q] = -1;
    }
  };
  go();
  return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("chord diagram literals") {
  const ChordDiagram crossing = ChordDiagram::parse("1-3,2-4");
  CHECK(crossing.chords() == 2);
  CHECK(crossing.to_string() == "1-3,2-4");
  CHECK(ChordDiagram::parse("2-3,4-1") == ChordDiagram::parse("1-2,3-4"));
  CHECK(ChordDiagram::parse(" 3-1 , 4-2 ") == crossing);
  CHECK_THROWS_AS(ChordDiagram::parse("1-2,2-3"), ParseError);
  CHECK_THROWS_AS(ChordDiagram::parse("1-3"), ParseError);
  CHECK_THROWS_AS(ChordDiagram::parse("1-2,3"), ParseError);
  CHECK_THROWS_AS(ChordDiagram({1, 0, 2}), std::invalid_argument);
  CHECK(all_diagrams(2).size() == 2);
  CHECK(all_diagrams(3).size() == 5);
}

TEST_CASE("canonical form") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : all_diagrams(n)) {
      CHECK(canonical_partner(d.partner()) == d.partner());
      CHECK(min_rotation(d.partner()) == d.partner());
      for (int k = 0; k < 2 * n; ++k) CHECK(d.rotated(k) == d);
    }
  }
}

TEST_CASE("Adams operator on chord diagrams") {
  const ChordDiagram crossing = ChordDiagram::parse("1-3,2-4");
  const ChordDiagram parallel = ChordDiagram::parse("1-2,3-4");
  CHECK(psi_chords(crossing, 2) == ChordCounts{{crossing, 8}, {parallel, 8}});
  const ChordDiagram one = ChordDiagram::parse("1-2");
  for (int m = 1; m <= 5; ++m) CHECK(psi_chords(one, m) == ChordCounts{{one, static_cast<long>(m) * m}});
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : all_diagrams(n)) {
      CHECK(psi_chords(d, 1) == ChordCounts{{d, 1}});
      for (int m = 1; m <= 3; ++m) {
        const ChordCounts got = psi_chords(d, m);
        long total = 0, expected = 1;
        for (const auto& [k, c] : got) total += c;
        for (int i = 0; i < 2 * n; ++i) expected *= m;
        CHECK(total == expected);
        CHECK(got == psi_chords_reference(d, m));
        std::map<std::vector<int>, long> flat;
        for (const auto& [k, c] : got) flat[k.partner()] = c;
        CHECK(flat == lifts_by_odometer(d.partner(), m));
        std::vector<int> turned(d.partner().size());
        const int size = static_cast<int>(turned.size());
        for (int p = 0; p < size; ++p) {
          turned[static_cast<std::size_t>((p + 1) % size)] = (d.partner()[static_cast<std::size_t>(p)] + 1) % size;
        }
        CHECK(lifts_by_odometer(turned, m) == flat);
      }
    }
  }
}
