#include "prudent/oracle.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace prudent;

namespace {

using P = std::pair<int, int>;

// Prudence straight from the definition: no visited vertex anywhere on the
// ray from the endpoint in the step direction.
bool naive_prudent(const std::set<P>& seen, P at, P d) {
  for (const auto& v : seen) {
    int dx = v.first - at.first, dy = v.second - at.second;
    if (d.first != 0 && dy == 0 && dx * d.first > 0) return false;
    if (d.second != 0 && dx == 0 && dy * d.second > 0) return false;
  }
  return true;
}

struct Naive {
  int max_steps;
  int sides;  // 2 or 4
  int max_area;
  std::vector<long long> walks;
  std::map<long, long long> polygons;
  std::vector<P> path{{0, 0}};
  std::set<P> seen{{0, 0}};
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  void run() {
    const P at = path.back();
    const int n = static_cast<int>(path.size()) - 1;
    ++walks[n];
    if (n >= 3 && std::abs(at.first) + std::abs(at.second) == 1) {
      long twice = 0;
      for (std::size_t i = 1; i < path.size(); ++i)
        twice += static_cast<long>(path[i - 1].first) * path[i].second - static_cast<long>(path[i].first) * path[i - 1].second;
      long a = std::labs(twice) / 2;
      if (a >= 1 && a <= max_area) ++polygons[a];
    }
    if (n == max_steps) return;
    const P dirs[] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    for (P d : dirs) {
      if (!naive_prudent(seen, at, d)) continue;
      P q{at.first + d.first, at.second + d.second};
      int a0 = xmin, a1 = xmax, b0 = ymin, b1 = ymax;
      xmin = std::min(xmin, q.first);
      xmax = std::max(xmax, q.first);
      ymin = std::min(ymin, q.second);
      ymax = std::max(ymax, q.second);
      bool ok = sides == 4 || q.second == ymax || q.first == xmax;
      if (ok) {
        path.push_back(q);
        seen.insert(q);
        run();
        seen.erase(q);
        path.pop_back();
      }
      xmin = a0, xmax = a1, ymin = b0, ymax = b1;
    }
  }
};

long long lattice_walk_count(LatticeWalk& w, int depth) {
  if (depth == 0) return 1;
  long long c = 0;
  for (Step s : {Step::N, Step::E, Step::S, Step::W}) {
    if (!w.prudent_step(s)) continue;
    w.push(s);
    c += lattice_walk_count(w, depth - 1);
    w.pop();
  }
  return c;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("prudent walk counts: occupancy ray scan against the definition") {
    const int L = 10;
    Naive nv{L, 4, 0, std::vector<long long>(L + 1, 0)};
    nv.run();
    for (int n = 1; n <= L; ++n) {
      LatticeWalk w(n + 1);
      CHECK(lattice_walk_count(w, n) == nv.walks[n]);
    }
    // prudent walks first fall behind self-avoiding walks (284) at length 5
    const long long known[] = {4, 12, 36, 100, 276, 748, 2012, 5356, 14172, 37276};
    for (int n = 1; n <= L; ++n) CHECK(nv.walks[n] == known[n - 1]);
  }

  TEST_CASE("polygon tallies against a naive search") {
    for (int k : {2, 4}) {
      const int A = 5;
      Naive nv{2 * A + 1, k, A, std::vector<long long>(2 * A + 2, 0)};
      nv.run();
      CountTable t = enumerate_prudent_polygons(k, A);
      for (int a = 1; a <= A; ++a) CHECK(t.counts[a] == BigInt(static_cast<long>(nv.polygons[a])));
    }
  }

  TEST_CASE("parallel and serial searches agree") {
    for (int k : {2, 3, 4}) {
      OracleOptions par, ser;
      ser.parallel = false;
      CHECK(enumerate_prudent_polygons(k, 6, par).counts == enumerate_prudent_polygons(k, 6, ser).counts);
    }
  }

  TEST_CASE("oracle equals the generating functions up to area 6") {
    for (int k : {2, 3, 4}) CHECK(enumerate_prudent_polygons(k, 6).counts == count_series(k, 6).counts);
  }

  TEST_CASE("area 1: the unit square") {
    // eight rooted oriented walks around the unit square touch the origin
    CHECK(enumerate_prudent_polygons(4, 1).counts[1] == 8);
    CHECK(enumerate_prudent_polygons(2, 1).counts[1] == 4);
    CHECK(enumerate_prudent_polygons(3, 1).counts[1] == 6);
  }

  TEST_CASE("3-sided exclusion only removes walks") {
    OracleOptions with, without;
    without.exclusion = false;
    auto a = enumerate_prudent_polygons(3, 6, with), b = enumerate_prudent_polygons(3, 6, without);
    for (int n = 1; n <= 6; ++n) CHECK(a.counts[n] <= b.counts[n]);
  }

  TEST_CASE("step parsing and classification") {
    CHECK(format_steps(parse_steps("ESW")) == "ESW");
    CHECK(format_steps(parse_steps("E,S,W")) == "ESW");
    CHECK_THROWS_AS(parse_steps("EXW"), UsageError);
    CHECK(polygon_area(parse_steps("ENW")) == 1);
    CHECK(polygon_area(parse_steps("EENWW")) == 2);
    CHECK_THROWS_AS(polygon_area(parse_steps("EE")), UsageError);

    Classification square = classify_walk(parse_steps("NEE"));
    CHECK(square.is_prudent);
    CHECK(square.sided[2]);
    CHECK(classify_walk(parse_steps("NES")).sided[2]);  // (1,0) is on the east side
    Classification sw = classify_walk(parse_steps("ESW"));  // ends on the south-west corner
    CHECK_FALSE(sw.sided[2]);
    CHECK(sw.sided[4]);
    CHECK(sw.excluded_3sided);
    CHECK_FALSE(classify_walk(parse_steps("NESW")).is_prudent);  // steps onto the origin
    CHECK_FALSE(classify_walk(parse_steps("EWE")).is_prudent);
  }

  TEST_CASE("bounding box and side membership") {
    BoundingBox b{0, 2, -1, 1};
    CHECK(b.on_boundary({2, 0}));
    CHECK_FALSE(b.on_boundary({1, 0}));
    SideMembership corner = SideMembership::of({2, 1}, b);
    CHECK(corner.on_north);
    CHECK(corner.on_east);
    CHECK(corner.allows(2));
    SideMembership south = SideMembership::of({1, -1}, b);
    CHECK_FALSE(south.allows(3));
    CHECK(south.allows(4));
    BoundingBox flat{0, 3, 0, 0};
    SideMembership f = SideMembership::of({1, 0}, flat);
    CHECK(f.on_north);
    CHECK(f.on_south);
  }

  TEST_CASE("resource and argument limits") {
    CHECK_THROWS_AS(enumerate_prudent_polygons(4, kOracleMaxArea + 1), ResourceError);
    CHECK_THROWS_AS(enumerate_prudent_polygons(5, 3), UsageError);
    CHECK_THROWS_AS(enumerate_prudent_polygons(3, 0), UsageError);
  }
}
