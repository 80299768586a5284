#include "floerkit/braid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace floerkit {

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

BraidWord parse_braid(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 'T')
            throw SyntaxError("bad token '" + tok + "'");
        size_t caret = tok.find('^');
        if (caret == std::string::npos || caret + 1 >= tok.size())
            throw SyntaxError("missing exponent in '" + tok + "'");
        std::string gen_s = tok.substr(1, caret - 1);
        std::string exp_s = tok.substr(caret + 1);
        int gen;
        long exp;
        try {
            size_t used = 0;
            gen = std::stoi(gen_s, &used);
            if (used != gen_s.size()) throw std::invalid_argument("");
            exp = std::stol(exp_s, &used);
            if (used != exp_s.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw SyntaxError("bad token '" + tok + "'");
        }
        if (gen == 1) throw SubgroupError("generator T1 is not allowed");
        if (gen != 2 && gen != 3)
            throw SyntaxError("unknown generator T" + gen_s);
        if (gen == 2 && exp % 2 != 0)
            throw SubgroupError("odd power of T2");
        if (exp == 0) continue;
        if (!w.letters.empty() && w.letters.back().gen == gen) {
            w.letters.back().exp += exp;
            if (w.letters.back().exp == 0) w.letters.pop_back();
        } else {
            w.letters.push_back({gen, exp});
        }
    }
    return w;
}

KnotSpec parse_knot_spec(const std::string& text) {
    // Format: K(<epsilon>, <word>)
    size_t open = text.find('(');
    size_t close = text.rfind(')');
    size_t k = text.find_first_not_of(" \t");
    if (k == std::string::npos || text[k] != 'K' || open == std::string::npos ||
        close == std::string::npos || close < open)
        throw SyntaxError("expected K(<epsilon>, <braid word>)");
    std::string inner = text.substr(open + 1, close - open - 1);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) throw SyntaxError("missing comma in knot spec");
    std::string eps_s = inner.substr(0, comma);
    KnotSpec spec;
    try {
        size_t used = 0;
        // trim
        size_t b = eps_s.find_first_not_of(" \t");
        size_t e = eps_s.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("");
        eps_s = eps_s.substr(b, e - b + 1);
        spec.epsilon = std::stoi(eps_s, &used);
        if (used != eps_s.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw SyntaxError("bad epsilon");
    }
    if (spec.epsilon != 1 && spec.epsilon != -1)
        throw SyntaxError("epsilon must be 1 or -1");
    spec.sigma = parse_braid(inner.substr(comma + 1));
    return spec;
}

// ---------------------------------------------------------------------------
// PL maps
// ---------------------------------------------------------------------------

namespace {

long floor_long(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q.convert_to<long>();
}

bool point_in_or_on(const std::vector<Pt>& poly, const Pt& p) {
    return point_on_polygon(poly, p) || point_in_polygon(poly, p);
}

}  // namespace

Pt PLMap::apply_point(const Pt& p) const {
    long ux0 = floor_long(p.x), uy0 = floor_long(p.y);
    for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
            Pt q{p.x - (ux0 + dx), p.y - (uy0 + dy)};
            for (const auto& cell : cells) {
                if (point_in_or_on(cell.poly, q)) {
                    Pt r = cell.f(q);
                    long ux = ux0 + dx, uy = uy0 + dy;
                    return {r.x + a00 * ux + a01 * uy, r.y + a10 * ux + a11 * uy};
                }
            }
        }
    // Outside all cells: identity plus equivariance staircase.  Only valid
    // when A = I off the cells, which holds for identity_outside maps.
    return p;
}

TorusCurve PLMap::apply(const TorusCurve& c) const {
    // Build the closed vertex list of one period, subdivide each segment at
    // cell-boundary crossings, then map every piece with the cell containing
    // its midpoint.  Consecutive pieces may disagree by a lattice vector at
    // seams where the cell maps only match modulo translation (annulus
    // twists); stitching those jumps produces a lift of the torus map.
    std::vector<Pt> closed = c.verts;
    closed.push_back({c.verts[0].x + c.hol_x, c.verts[0].y + c.hol_y});

    auto locate_map = [&](const Pt& p) -> AffineMap {
        long ux0 = floor_long(p.x), uy0 = floor_long(p.y);
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy) {
                Pt u{Rat(ux0 + dx), Rat(uy0 + dy)};
                for (const auto& cell : cells)
                    if (point_in_or_on(cell.poly, p - u)) {
                        AffineMap m = cell.f;
                        // Conjugate by the translate: q -> f(q - u) + A u.
                        m.c = {m.c.x - (m.b00 * u.x + m.b01 * u.y) + a00 * u.x + a01 * u.y,
                               m.c.y - (m.b10 * u.x + m.b11 * u.y) + a10 * u.x + a11 * u.y};
                        return m;
                    }
            }
        return AffineMap{};  // identity outside the cells
    };

    std::vector<Pt> out;
    Pt off{Rat(0), Rat(0)};
    Pt prev_end{Rat(0), Rat(0)};
    bool have_prev = false;
    for (size_t i = 0; i + 1 < closed.size(); ++i) {
        const Pt& a = closed[i];
        const Pt& b = closed[i + 1];
        std::vector<Rat> ts{Rat(0), Rat(1)};
        Rat x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
        Rat y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
        long ux_lo = floor_long(x0) - 1, ux_hi = floor_long(x1) + 1;
        long uy_lo = floor_long(y0) - 1, uy_hi = floor_long(y1) + 1;
        for (long ux = ux_lo; ux <= ux_hi; ++ux)
            for (long uy = uy_lo; uy <= uy_hi; ++uy)
                for (const auto& cell : cells) {
                    size_t n = cell.poly.size();
                    for (size_t e = 0; e < n; ++e) {
                        Pt ea = cell.poly[e] + Pt{Rat(ux), Rat(uy)};
                        Pt eb = cell.poly[(e + 1) % n] + Pt{Rat(ux), Rat(uy)};
                        if (auto hit = seg_intersect(a, b, ea, eb))
                            ts.push_back(hit->first);
                    }
                }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (size_t j = 0; j + 1 < ts.size(); ++j) {
            Pt pa = a + (b - a) * ts[j];
            Pt pb = a + (b - a) * ts[j + 1];
            Pt mid = (pa + pb) * Rat(1, 2);
            AffineMap f = locate_map(mid);
            Pt ia = f(pa), ib = f(pb);
            if (have_prev) {
                Pt jump = ia - prev_end;
                if (denominator(jump.x) != 1 || denominator(jump.y) != 1)
                    throw std::logic_error("PL map discontinuity is not a lattice vector");
                off = off - jump;
            }
            out.push_back(ia + off);
            prev_end = ib;
            have_prev = true;
        }
    }
    Pt closing = prev_end + off;  // lift of the image of start + holonomy
    Pt hol = closing - out.front();
    if (denominator(hol.x) != 1 || denominator(hol.y) != 1)
        throw std::logic_error("image holonomy is not a lattice vector");
    TorusCurve res;
    res.verts = std::move(out);
    res.hol_x = numerator(hol.x).convert_to<long>();
    res.hol_y = numerator(hol.y).convert_to<long>();
    // Drop collinear and repeated vertices to keep sizes down.
    std::vector<Pt> clean;
    size_t n = res.verts.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& prev = clean.empty()
                             ? Pt{res.verts[n - 1].x - res.hol_x,
                                  res.verts[n - 1].y - res.hol_y}
                             : clean.back();
        const Pt& cur = res.verts[i];
        Pt nxt = (i + 1 < n) ? res.verts[i + 1]
                             : Pt{res.verts[0].x + res.hol_x,
                                  res.verts[0].y + res.hol_y};
        if (cur == prev) continue;
        if (orient(prev, cur, nxt) == 0 && dot(cur - prev, nxt - cur) > 0)
            continue;
        clean.push_back(cur);
    }
    if (clean.empty()) clean.push_back(res.verts[0]);  // straight circle
    res.verts = std::move(clean);
    return res;
}

// ---------------------------------------------------------------------------
// Twist map construction
// ---------------------------------------------------------------------------

namespace {

// The marked points sit on the vertical circle x = 1/2 at heights 1/4 and
// 3/4; the two unmarked special points are (0,1/4) and (0,3/4).
const Pt kMarkA{Rat(1, 2), Rat(1, 4)};
const Pt kMarkB{Rat(1, 2), Rat(3, 4)};

// Horizontal shear band y in [ya, yb], displacing by s*(1,0) across it.
PLCell horiz_cell(const Rat& ya, const Rat& yb, const Rat& g0, const Rat& g1) {
    PLCell cell;
    cell.poly = {{Rat(0), ya}, {Rat(1), ya}, {Rat(1), yb}, {Rat(0), yb}};
    Rat m = (g1 - g0) / (yb - ya);
    AffineMap f;
    f.b01 = m;
    f.c = {g0 - m * ya, Rat(0)};
    cell.f = f;
    return cell;
}

// Vertical shear band x in [xa, xb], displacement ramping from g0*(0,1) to
// g1*(0,1).
PLCell vert_cell(const Rat& xa, const Rat& xb, const Rat& g0, const Rat& g1) {
    PLCell cell;
    cell.poly = {{xa, Rat(0)}, {xb, Rat(0)}, {xb, Rat(1)}, {xa, Rat(1)}};
    Rat m = (g1 - g0) / (xb - xa);
    AffineMap f;
    f.b10 = m;
    f.c = {Rat(0), g0 - m * xa};
    cell.f = f;
    return cell;
}

}  // namespace

PLMap twist_map(int gen, long exp, const Conventions& cv) {
    int conv = (gen == 2) ? cv.s2 : cv.s3;
    int sign = (exp > 0 ? 1 : -1) * conv;
    PLMap m;
    if (gen == 2) {
        // Twisting around the horizontal circle y = 1/4, once per T2^2.
        // Either a single full Dehn twist in a band on one side of the
        // circle, or one twist in each of the two half-bands flanking it;
        // both fix the marked point on the core, but they differ as mapping
        // classes rel the marked points.
        if (cv.t2_double) {
            m.cells.push_back(horiz_cell(Rat(0), Rat(1, 4), Rat(0), Rat(sign)));
            m.cells.push_back(
                horiz_cell(Rat(1, 4), Rat(1, 2), Rat(sign), Rat(2 * sign)));
        } else if (cv.side2_right)
            m.cells.push_back(horiz_cell(Rat(1, 4), Rat(1, 2), Rat(0), Rat(sign)));
        else
            m.cells.push_back(horiz_cell(Rat(0), Rat(1, 4), Rat(0), Rat(sign)));
    } else {
        // Half twist around the vertical circle x = 1/2: the core is
        // displaced by half a period, exchanging the two marked points that
        // sit antipodally on it.  Across the full band the displacement is
        // either a whole period or returns to zero; the two choices differ
        // by a full twist around the circle.
        Rat top = cv.t3_zero ? Rat(0) : Rat(sign);
        m.cells.push_back(
            vert_cell(Rat(1, 4), Rat(1, 2), Rat(0), Rat(sign) / 2));
        m.cells.push_back(
            vert_cell(Rat(1, 2), Rat(3, 4), Rat(sign) / 2, top));
    }
    return m;
}

HeegaardDiagram initial_diagram(const Conventions& cv) {
    HeegaardDiagram d;
    // Vertical curve in one of the two strips cut out by the marked
    // columns x = 0 and x = 1/2.
    d.alpha.verts = {{cv.alpha_right ? Rat(13, 16) : Rat(5, 16), Rat(1, 16)}};
    d.alpha.hol_x = 0;
    d.alpha.hol_y = 1;
    d.beta.verts = {{Rat(0), Rat(0)}};
    d.beta.hol_x = 1;
    d.beta.hol_y = 0;
    const Pt kSpareA{Rat(0), Rat(1, 4)}, kSpareB{Rat(0), Rat(3, 4)};
    static const std::pair<Pt, Pt> pairs[6] = {
        {kMarkA, kMarkB},  {kSpareA, kSpareB}, {kMarkB, kSpareB},
        {kMarkA, kSpareA}, {kMarkA, kSpareB},  {kMarkB, kSpareA}};
    const auto& pr = pairs[cv.zw_pair % 6];
    d.z = cv.zw_swap ? pr.second : pr.first;
    d.w = cv.zw_swap ? pr.first : pr.second;
    return d;
}

HeegaardDiagram apply_braid(const BraidWord& sigma, const HeegaardDiagram& d,
                            const Conventions& cv) {
    HeegaardDiagram out = d;
    std::vector<BraidLetter> order = sigma.letters;
    if (!cv.left_first) std::reverse(order.begin(), order.end());
    for (const auto& letter : order) {
        PLMap m = twist_map(letter.gen, letter.exp, cv);
        // Gen 2 only occurs squared and one map application is already the
        // full twist.
        long reps = (letter.gen == 2) ? std::labs(letter.exp) / 2
                                      : std::labs(letter.exp);
        for (long r = 0; r < reps; ++r) {
            out.alpha = m.apply(out.alpha);
            out = reduce_curve(out);  // keep intermediate curves small
        }
    }
    return out;
}

}  // namespace floerkit
