#pragma once

// Brute-force enumeration of prudent polygons: depth-first search over
// prudent walks from the origin, classified by the sides of the bounding box
// the endpoint occupies after every step.

#include "prudent/enumerate.hpp"

#include <array>
#include <string>
#include <vector>

namespace prudent {

enum class Step { N, E, S, W };

struct Point {
  int x = 0, y = 0;
  bool operator==(const Point&) const = default;
};

Point delta(Step s);
char step_char(Step s);
std::vector<Step> parse_steps(const std::string& text);  // "ESW" or "E,S,W"
std::string format_steps(const std::vector<Step>& steps);

struct BoundingBox {
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  bool contains(Point p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  bool on_boundary(Point p) const {
    return contains(p) && (p.x == xmin || p.x == xmax || p.y == ymin || p.y == ymax);
  }
  BoundingBox extended(Point p) const;
  int width() const { return xmax - xmin; }
};

/// Inclusive side membership: corners lie on both adjacent sides, and a
/// degenerate box puts its points on both opposite sides.
struct SideMembership {
  bool on_north = false, on_east = false, on_west = false, on_south = false;

  static SideMembership of(Point p, const BoundingBox& box);
  bool allows(int k) const;  // side condition for k-sided walks
};

/// Walk from the origin with an occupancy grid sized for `capacity` steps.
class LatticeWalk {
 public:
  explicit LatticeWalk(int capacity);

  int size() const { return static_cast<int>(steps_.size()); }
  Point end() const { return points_.back(); }
  const BoundingBox& box() const { return boxes_.back(); }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<Point>& vertices() const { return points_; }
  bool occupied(Point p) const;

  /// Ray condition: no occupied vertex lies on the ray from the current
  /// endpoint in direction s (which includes the target vertex itself).
  bool prudent_step(Step s) const;

  void push(Step s);
  void pop();

 private:
  std::size_t cell(Point p) const;
  int radius_;
  int side_;
  std::vector<unsigned char> grid_;
  std::vector<Step> steps_;
  std::vector<Point> points_;
  std::vector<BoundingBox> boxes_;
};

struct Classification {
  bool is_prudent = false;
  std::array<bool, 5> sided{};  // sided[k] for k = 1..4; undefined if not prudent
  bool excluded_3sided = false;
};

Classification classify_walk(const std::vector<Step>& steps);

/// Cells enclosed by the walk closed back to the origin (absolute shoelace).
long polygon_area(const std::vector<Step>& steps);

struct OracleOptions {
  bool parallel = true;
  bool exclusion = true;  // apply the 3-sided south-then-sideways exclusion
};

inline constexpr int kOracleMaxArea = 10;

/// Tally of oriented rooted k-sided prudent polygons by area, 1..max_area.
CountTable enumerate_prudent_polygons(int k, int max_area, OracleOptions options = {});

}  // namespace prudent
