#include "floerkit/geometry.hpp"

namespace floerkit {

std::optional<std::pair<Rat, Rat>> seg_intersect(const Pt& a, const Pt& b,
                                                 const Pt& c, const Pt& d) {
    Pt r = b - a, s = d - c;
    Rat den = cross(r, s);
    if (den == 0) return std::nullopt;
    Pt ca = c - a;
    Rat t = cross(ca, s) / den;
    Rat u = cross(ca, r) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return std::make_pair(t, u);
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

long winding_number(const std::vector<Pt>& poly, const Pt& p) {
    long w = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = poly[i];
        const Pt& b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++w;
        } else {
            if (b.y <= p.y && orient(a, b, p) < 0) --w;
        }
    }
    return w;
}

bool point_in_polygon(const std::vector<Pt>& poly, const Pt& p) {
    return winding_number(poly, p) != 0;
}

bool point_on_polygon(const std::vector<Pt>& poly, const Pt& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(p, poly[i], poly[(i + 1) % n])) return true;
    return false;
}

Rat dist2_point_seg(const Pt& p, const Pt& a, const Pt& b) {
    Pt ab = b - a;
    Rat len2 = dot(ab, ab);
    if (len2 == 0) {
        Pt d = p - a;
        return dot(d, d);
    }
    Rat t = dot(p - a, ab) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Pt proj = a + ab * t;
    Pt d = p - proj;
    return dot(d, d);
}

Rat dist2_seg_seg(const Seg& s, const Seg& t) {
    if (seg_intersect(s.a, s.b, t.a, t.b)) return Rat(0);
    // Parallel overlapping segments also meet; check collinear overlap.
    if (cross(s.b - s.a, t.b - t.a) == 0 && orient(s.a, s.b, t.a) == 0) {
        if (on_segment(t.a, s.a, s.b) || on_segment(t.b, s.a, s.b) ||
            on_segment(s.a, t.a, t.b))
            return Rat(0);
    }
    Rat m = dist2_point_seg(s.a, t.a, t.b);
    Rat v = dist2_point_seg(s.b, t.a, t.b);
    if (v < m) m = v;
    v = dist2_point_seg(t.a, s.a, s.b);
    if (v < m) m = v;
    v = dist2_point_seg(t.b, s.a, s.b);
    if (v < m) m = v;
    return m;
}

}  // namespace floerkit
