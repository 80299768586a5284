#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <utility>
#include <vector>

namespace floerkit {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const Rat& s) const { return {x * s, y * s}; }
};

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Orientation of the triangle (a,b,c): sign of the cross product.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    Rat v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

struct Seg {
    Pt a, b;
};

// Proper or improper intersection parameter of segment [a,b] with segment [c,d].
// Returns (t, u) with a+(b-a)t = c+(d-c)u when the segments are not parallel
// and the intersection point lies within both closed segments.
std::optional<std::pair<Rat, Rat>> seg_intersect(const Pt& a, const Pt& b,
                                                 const Pt& c, const Pt& d);

// True if p lies on the closed segment [a,b].
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// Winding number of a closed polygon around p; p must avoid the boundary.
long winding_number(const std::vector<Pt>& poly, const Pt& p);

// Point strictly inside polygon (nonzero winding). p must avoid the boundary.
bool point_in_polygon(const std::vector<Pt>& poly, const Pt& p);

// True if p lies on the boundary of the polygon.
bool point_on_polygon(const std::vector<Pt>& poly, const Pt& p);

// Squared euclidean distance from point to closed segment.
Rat dist2_point_seg(const Pt& p, const Pt& a, const Pt& b);

// Squared euclidean distance between two closed segments.
Rat dist2_seg_seg(const Seg& s, const Seg& t);

}  // namespace floerkit
