#pragma once
#include <string>
#include <vector>

#include "floerkit/errors.hpp"
#include "floerkit/geometry.hpp"

namespace floerkit {

// Word in the index-2/3 twist generators; gen is 2 or 3 and exp is the
// exponent of the underlying braid generator (even for gen 2).
struct BraidLetter {
    int gen;
    long exp;
};

struct BraidWord {
    std::vector<BraidLetter> letters;
    bool empty() const { return letters.empty(); }
};

struct KnotSpec {
    int epsilon = 1;
    BraidWord sigma;
};

BraidWord parse_braid(const std::string& text);
// Text format: K(<epsilon>, <braid word>), e.g. K(1, T2^2 T3^1).
KnotSpec parse_knot_spec(const std::string& text);

// A closed curve on the flat torus R^2/Z^2, stored as the lift of one
// period: vertices verts[0..n-1], then closing up to verts[0]+holonomy.
struct TorusCurve {
    std::vector<Pt> verts;
    long hol_x = 0, hol_y = 1;

    size_t size() const { return verts.size(); }
    // Endpoint-inclusive vertex of segment i (i in [0, size())), with the
    // closing segment ending at verts[0]+holonomy.
    Pt seg_a(size_t i) const { return verts[i]; }
    Pt seg_b(size_t i) const {
        if (i + 1 < verts.size()) return verts[i + 1];
        return {verts[0].x + hol_x, verts[0].y + hol_y};
    }
};

struct HeegaardDiagram {
    TorusCurve alpha;
    TorusCurve beta;  // always the horizontal line y = 0, holonomy (1,0)
    Pt z, w;
    int k_meridian = 0;
};

// One intersection point of the lifted alpha arc with the lifted beta line.
struct LiftIntersection {
    Pt p;          // lift coordinates (on the line y = 0)
    long copy;     // which holonomy translate of the base polyline
    size_t seg;    // segment index within the base polyline
    Rat t;         // parameter on that segment
    int dir;       // +1 if alpha crosses upward, -1 downward
};

struct LiftedDiagram {
    HeegaardDiagram diagram;
    // Intersections with the beta lift (the line y = 0), ordered along the
    // alpha lift.
    std::vector<LiftIntersection> points;
    // Translate range of the base polyline needed to cover all points.
    long copy_lo = 0, copy_hi = 0;
};

// Piecewise-linear homeomorphism of the torus given by affine cells in a
// fundamental region plus lattice equivariance F(v+u) = F(v) + A u.
struct AffineMap {
    Rat b00 = 1, b01 = 0, b10 = 0, b11 = 1;
    Pt c = {0, 0};
    Pt operator()(const Pt& p) const {
        return {b00 * p.x + b01 * p.y + c.x, b10 * p.x + b11 * p.y + c.y};
    }
};

struct PLCell {
    std::vector<Pt> poly;  // simple polygon, positively oriented
    AffineMap f;
};

struct PLMap {
    std::vector<PLCell> cells;
    long a00 = 1, a01 = 0, a10 = 0, a11 = 1;
    bool identity_outside = true;  // if false, cells must tile the unit square

    TorusCurve apply(const TorusCurve& c) const;
    Pt apply_point(const Pt& p) const;
};

// Geometric conventions; the defaults are the calibrated values (see the
// trefoil oracle test).  All members are plain data so experiments can
// flip them.
//
// The marked points are the 2-torsion points (1/2,1/4) and (1/2,3/4) of
// the vertical circle x = 1/2; the other two special points, (0,1/4) and
// (0,3/4), stay unmarked.  The gen-3 letter is a half twist around the
// vertical circle x = 1/2, which carries the circle to itself and
// exchanges the two marked points.  The squared gen-2 letter is a full
// Dehn twist around the horizontal circle y = 1/4, realised in a band on
// one side of it so the marked point on its core stays put.  An odd gen-2
// power would carry the marked point (1/2,1/4) to the unmarked point
// (0,1/4), which is why only even powers are admitted.
struct Conventions {
    int s2 = 1;              // handedness of the gen-2 full twist
    int s3 = 1;              // handedness of the gen-3 half twist
    bool t2_double = false;  // gen-2 squared twists on both sides of its circle
    bool side2_right = false;  // gen-2 band right of the marked column
    bool alpha_right = false;  // initial alpha right of the marked column
    bool merid_sep = false;    // meridian separates the marked points
    bool merid_right = false;  // side / chirality of the meridian
    bool t3_zero = false;      // gen-3 shear returns to zero past the core
    bool left_first = true;  // leftmost letter of the word acts first
    int orient_eps = 1;      // sign convention of the algebraic intersection
    // Which pair of the four special points carries the basepoints, indexing
    // {(1/2,1/4),(1/2,3/4)}, {(0,1/4),(0,3/4)}, {(1/2,3/4),(0,3/4)},
    // {(1/2,1/4),(0,1/4)}, {(1/2,1/4),(0,3/4)}, {(1/2,3/4),(0,1/4)}.
    int zw_pair = 0;
    bool zw_swap = false;    // exchange the roles of the two marked points
    bool bigon_from_ccw = true;  // which bigon corner is the source
};

const Conventions& default_conventions();

HeegaardDiagram initial_diagram(const Conventions& cv);
PLMap twist_map(int gen, long exp, const Conventions& cv);

HeegaardDiagram apply_braid(const BraidWord& sigma, const HeegaardDiagram& d,
                            const Conventions& cv);
// Signed count of alpha crossings over beta, times the orientation token.
int algebraic_intersection(const HeegaardDiagram& d, const Conventions& cv);
std::pair<HeegaardDiagram, long> normalize_epsilon(const HeegaardDiagram& d,
                                                   int epsilon,
                                                   const Conventions& cv);
HeegaardDiagram reduce_curve(const HeegaardDiagram& d);
LiftedDiagram lift(const HeegaardDiagram& d);

// Full pipeline up to the lifted diagram.
LiftedDiagram build_lifted(const KnotSpec& spec, const Conventions& cv);

// Geometric intersection count with beta on the torus.
size_t geometric_intersection(const HeegaardDiagram& d);

// Validation helpers (also used by tests).
bool curve_embedded_on_torus(const TorusCurve& c);
std::string diagram_to_json(const HeegaardDiagram& d);

}  // namespace floerkit
