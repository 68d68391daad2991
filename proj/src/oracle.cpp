#include "prudent/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace prudent {

namespace {

constexpr std::array<Step, 4> kSteps{Step::N, Step::E, Step::S, Step::W};

bool excluded_transition(Step prev, Step s, Point at, const BoundingBox& box) {
  if (prev != Step::S || box.width() == 0) return false;
  if (s == Step::W) return at.x == box.xmax;
  if (s == Step::E) return at.x == box.xmin;
  return false;
}

struct Tally {
  std::vector<long long> by_area;
};

struct Search {
  int k;
  int max_area;
  int max_steps;
  bool exclusion;

  void dfs(LatticeWalk& w, Tally& t) const {
    const Point p = w.end();
    const int n = w.size();
    if (n >= 3 && std::abs(p.x) + std::abs(p.y) == 1) {
      long a = polygon_area(w.steps());
      if (a >= 1 && a <= max_area) ++t.by_area[static_cast<std::size_t>(a)];
    }
    if (n >= max_steps) return;
    for (Step s : kSteps) {
      if (!w.prudent_step(s)) continue;
      Point d = delta(s);
      Point q{p.x + d.x, p.y + d.y};
      if (std::abs(q.x) + std::abs(q.y) - 1 > max_steps - n - 1) continue;
      BoundingBox nb = w.box().extended(q);
      if (!SideMembership::of(q, nb).allows(k)) continue;
      if (k == 3 && exclusion && n > 0 && excluded_transition(w.steps().back(), s, p, w.box())) continue;
      w.push(s);
      if (!w.box().on_boundary(w.end())) throw std::logic_error("prudent walk endpoint left the box boundary");
      dfs(w, t);
      w.pop();
    }
  }
};

}  // namespace

Point delta(Step s) {
  switch (s) {
    case Step::N: return {0, 1};
    case Step::E: return {1, 0};
    case Step::S: return {0, -1};
    case Step::W: return {-1, 0};
  }
  return {};
}

char step_char(Step s) { return "NESW"[static_cast<int>(s)]; }

std::vector<Step> parse_steps(const std::string& text) {
  std::vector<Step> out;
  for (char c : text) {
    switch (c) {
      case 'N': case 'n': out.push_back(Step::N); break;
      case 'E': case 'e': out.push_back(Step::E); break;
      case 'S': case 's': out.push_back(Step::S); break;
      case 'W': case 'w': out.push_back(Step::W); break;
      case ',': case ' ': break;
      default: throw UsageError(std::string("invalid step character '") + c + "'");
    }
  }
  return out;
}

std::string format_steps(const std::vector<Step>& steps) {
  std::string s;
  for (Step st : steps) s.push_back(step_char(st));
  return s;
}

BoundingBox BoundingBox::extended(Point p) const {
  return {std::min(xmin, p.x), std::max(xmax, p.x), std::min(ymin, p.y), std::max(ymax, p.y)};
}

SideMembership SideMembership::of(Point p, const BoundingBox& b) {
  return {p.y == b.ymax, p.x == b.xmax, p.x == b.xmin, p.y == b.ymin};
}

bool SideMembership::allows(int k) const {
  switch (k) {
    case 1: return on_north;
    case 2: return on_north || on_east;
    case 3: return on_north || on_east || on_west;
    case 4: return true;
  }
  throw UsageError("k must be in 1..4");
}

LatticeWalk::LatticeWalk(int capacity) : radius_(capacity + 1), side_(2 * (capacity + 1) + 1) {
  grid_.assign(static_cast<std::size_t>(side_) * side_, 0);
  points_.push_back({0, 0});
  boxes_.push_back({});
  grid_[cell({0, 0})] = 1;
}

std::size_t LatticeWalk::cell(Point p) const {
  return static_cast<std::size_t>(p.y + radius_) * side_ + static_cast<std::size_t>(p.x + radius_);
}

bool LatticeWalk::occupied(Point p) const {
  if (std::abs(p.x) > radius_ || std::abs(p.y) > radius_) return false;
  return grid_[cell(p)] != 0;
}

bool LatticeWalk::prudent_step(Step s) const {
  const Point d = delta(s);
  const BoundingBox& b = box();
  Point c{end().x + d.x, end().y + d.y};
  while (b.contains(c)) {
    if (grid_[cell(c)]) return false;
    c.x += d.x;
    c.y += d.y;
  }
  return true;
}

void LatticeWalk::push(Step s) {
  if (size() + 1 >= radius_) throw std::length_error("walk exceeds its capacity");
  Point d = delta(s);
  Point q{end().x + d.x, end().y + d.y};
  boxes_.push_back(box().extended(q));
  points_.push_back(q);
  steps_.push_back(s);
  grid_[cell(q)] = 1;
}

void LatticeWalk::pop() {
  grid_[cell(end())] = 0;
  points_.pop_back();
  boxes_.pop_back();
  steps_.pop_back();
}

Classification classify_walk(const std::vector<Step>& steps) {
  if (steps.empty()) throw UsageError("classify_walk needs a non-empty walk");
  Classification c;
  LatticeWalk w(static_cast<int>(steps.size()) + 1);
  c.sided = {false, true, true, true, true};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Step s = steps[i];
    if (!w.prudent_step(s)) return Classification{};
    if (i > 0 && excluded_transition(steps[i - 1], s, w.end(), w.box())) c.excluded_3sided = true;
    w.push(s);
    SideMembership m = SideMembership::of(w.end(), w.box());
    for (int k = 1; k <= 4; ++k) c.sided[k] = c.sided[k] && m.allows(k);
  }
  c.is_prudent = true;
  if (c.excluded_3sided) c.sided[3] = false;
  return c;
}

long polygon_area(const std::vector<Step>& steps) {
  Point p{0, 0};
  long twice = 0;
  for (Step s : steps) {
    Point d = delta(s);
    Point q{p.x + d.x, p.y + d.y};
    twice += static_cast<long>(p.x) * q.y - static_cast<long>(q.x) * p.y;
    p = q;
  }
  if (std::abs(p.x) + std::abs(p.y) != 1) throw UsageError("walk does not end next to the origin");
  // closing edge p -> origin contributes p.x*0 - 0*p.y = 0
  return std::labs(twice) / 2;
}

CountTable enumerate_prudent_polygons(int k, int max_area, OracleOptions options) {
  if (k < 2 || k > 4) throw UsageError("k must be 2, 3 or 4");
  if (max_area < 1) throw UsageError("max_area must be >= 1");
  if (max_area > kOracleMaxArea)
    throw ResourceError("brute-force search is limited to max_area <= " + std::to_string(kOracleMaxArea) +
                        " (walks of length up to 2*max_area+1)");
  Search search{k, max_area, 2 * max_area + 1, options.exclusion};

  // Independent subtrees: every admissible two-step prefix.
  std::vector<std::array<Step, 2>> prefixes;
  for (Step a : kSteps)
    for (Step b : kSteps) {
      auto c = classify_walk({a, b});
      bool ok = c.is_prudent && c.sided[k];
      if (k == 3 && !options.exclusion && c.is_prudent) ok = ok || (c.excluded_3sided && c.sided[4]);
      if (ok) prefixes.push_back({a, b});
    }

  std::vector<Tally> tallies(prefixes.size(), Tally{std::vector<long long>(max_area + 1, 0)});
  const long count = static_cast<long>(prefixes.size());
  auto run = [&](long idx) {
    LatticeWalk w(search.max_steps + 1);
    w.push(prefixes[idx][0]);
    w.push(prefixes[idx][1]);
    search.dfs(w, tallies[idx]);
  };
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) run(i);
  } else {
    for (long i = 0; i < count; ++i) run(i);
  }

  CountTable t;
  t.k = k;
  t.method = "oracle";
  t.counts.assign(max_area + 1, 0);
  for (const auto& tl : tallies)
    for (int a = 1; a <= max_area; ++a) t.counts[a] += static_cast<unsigned long>(tl.by_area[a]);
  return t;
}

}  // namespace prudent
