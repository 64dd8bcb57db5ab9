#ifndef XYPLANAR_GEOMETRY_H
#define XYPLANAR_GEOMETRY_H

#include <gmpxx.h>

#include <string>
#include <vector>

namespace xyplanar {

using Rat = mpq_class;

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Exact segment intersection classification.
enum class SegCross {
    None,
    Proper,      // interiors cross in one point
    Touch,       // exactly one shared point, an endpoint of at least one
    Overlap,     // collinear with a shared sub-segment
};
SegCross segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// Chebyshev distance from a point to a segment (exact rational).
Rat cheb_distance_point_segment(const Point& p, const Point& a, const Point& b);

/// x-coordinate of segment ab at height y; requires a.y != b.y and y between.
Rat x_at_y(const Point& a, const Point& b, const Rat& y);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Nearest rational with denominator dividing 2^k.
Rat dyadic_round(const Rat& r, unsigned k);

/// Total bits of numerator plus denominator (coordinate size reporting).
std::size_t rat_bits(const Rat& r);

}  // namespace xyplanar

#endif
