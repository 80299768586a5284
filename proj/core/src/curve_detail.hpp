#pragma once
#include <vector>

#include "floerkit/braid.hpp"

namespace floerkit::detail {

// Transverse crossing of the curve with a horizontal integer line.
struct HCross {
    long line;
    size_t seg;
    Rat t;
    Pt p;
    int dir;  // +1 upward, -1 downward
};

// Crossings with all lines y in Z, ordered along the base polyline.
std::vector<HCross> hline_crossings(const TorusCurve& c);

// Crossings with the vertical circle x = v (v must avoid vertex abscissae).
std::vector<HCross> vline_crossings(const TorusCurve& c, const Rat& v);

// True if no piece of any Z^2-translate of the curve and no translate of a
// marked point lies strictly inside the polygon.  Pieces on the boundary do
// not count.
bool region_empty(const std::vector<Pt>& poly, const TorusCurve& curve,
                  const std::vector<Pt>& marked);

// Parallel pushoff at distance ~delta (in the max norm) on the given side
// of the oriented curve, with miter joins.  Not validated; callers check.
TorusCurve offset_curve(const TorusCurve& c, int side, const Rat& delta);

// Point at parameter t of segment seg, where seg may lie outside [0, n) and
// is then shifted by the holonomy.
Pt curve_point(const TorusCurve& c, long seg, const Rat& t);

// Translate all vertices by an integer vector so verts[0] lands in [0,1)^2.
void rebase_curve(TorusCurve& c);

// Merge collinear consecutive segments and drop repeated vertices.
void clean_curve(TorusCurve& c);

// Meridian copies used by the epsilon normalization.  `copy` staggers
// parallel copies; `shift` nudges the whole family.
TorusCurve separating_meridian(long copy, bool mirror, int tdir,
                               const Rat& shift);
TorusCurve side_meridian(long copy, bool right, int tdir, const Rat& shift);

// Oriented smoothing of alpha with disjoint meridian copies; throws
// NormalizationImpossible on degenerate position, missed copies, or a
// disconnected result.
TorusCurve splice_meridian(const TorusCurve& a,
                           const std::vector<TorusCurve>& mers);

}  // namespace floerkit::detail
