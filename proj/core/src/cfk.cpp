#include "floerkit/cfk.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "curve_detail.hpp"
#include "nlohmann/json.hpp"

namespace floerkit {

using detail::curve_point;

int KnotComplex::index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return (int)i;
    return -1;
}

namespace {

long floor_long(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q.convert_to<long>();
}

// Count lattice translates of p strictly inside the polygon.
long count_inside(const std::vector<Pt>& poly, const Pt& p) {
    Rat x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
    for (const auto& v : poly) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    long cnt = 0;
    for (long ux = floor_long(x0 - p.x) - 1; ux <= floor_long(x1 - p.x) + 1; ++ux)
        for (long uy = floor_long(y0 - p.y) - 1; uy <= floor_long(y1 - p.y) + 1; ++uy) {
            Pt q{p.x + ux, p.y + uy};
            if (!point_on_polygon(poly, q) && point_in_polygon(poly, q)) ++cnt;
        }
    return cnt;
}

// Cancellation of a graded F2 complex given as arrow sets; returns surviving
// generator indices.
std::vector<int> cancel_all(int n, std::set<std::pair<int, int>> arrows) {
    std::vector<char> alive(n, 1);
    bool progress = true;
    while (progress) {
        progress = false;
        auto it = arrows.begin();
        if (it == arrows.end()) break;
        auto [x, y] = *it;
        // Collect a -> y and x -> b.
        std::vector<int> into_y, out_x;
        for (const auto& [a, b] : arrows) {
            if (b == y && a != x) into_y.push_back(a);
            if (a == x && b != y) out_x.push_back(b);
        }
        // Remove all arrows touching x or y.
        for (auto jt = arrows.begin(); jt != arrows.end();) {
            if (jt->first == x || jt->first == y || jt->second == x ||
                jt->second == y)
                jt = arrows.erase(jt);
            else
                ++jt;
        }
        for (int a : into_y)
            for (int b : out_x) {
                auto key = std::make_pair(a, b);
                if (!arrows.erase(key)) arrows.insert(key);
            }
        alive[x] = alive[y] = 0;
        progress = true;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (alive[i]) out.push_back(i);
    return out;
}

}  // namespace

std::vector<Bigon> find_bigons(const LiftedDiagram& ld, const Conventions& cv) {
    std::vector<Bigon> out;
    const TorusCurve& c = ld.diagram.alpha;
    long n = (long)c.size();
    const auto& pts = ld.points;
    size_t N = pts.size();
    // Candidate corner pairs: consecutive along the alpha lift, and
    // consecutive along the beta lift (the x axis).  A pair adjacent along
    // both arcs bounds the same disk either way, so dedup by index pair.
    std::set<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i + 1 < N; ++i) pairs.insert({i, i + 1});
    {
        std::vector<size_t> ord(N);
        for (size_t i = 0; i < N; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(),
                  [&](size_t a, size_t b) { return pts[a].p.x < pts[b].p.x; });
        for (size_t r = 0; r + 1 < N; ++r)
            pairs.insert({std::min(ord[r], ord[r + 1]),
                          std::max(ord[r], ord[r + 1])});
    }
    for (const auto& [i, j] : pairs) {
        long abs_i = pts[i].copy * n + (long)pts[i].seg;
        long abs_j = pts[j].copy * n + (long)pts[j].seg;
        std::vector<Pt> poly{pts[i].p};
        for (long s = abs_i + 1; s <= abs_j; ++s) {
            Pt v = curve_point(c, s, Rat(0));
            if (poly.back() != v) poly.push_back(v);
        }
        Pt pj = pts[j].p;
        if (poly.back() != pj) poly.push_back(pj);
        if (poly.size() < 3) continue;
        // The closing edge runs along the axis between the corners.  Interior
        // crossings of the arc with the axis must stay clear of it, otherwise
        // the boundary is not embedded.
        Rat xlo = std::min(pts[i].p.x, pts[j].p.x);
        Rat xhi = std::max(pts[i].p.x, pts[j].p.x);
        bool ok = true;
        for (size_t v = 0; v + 1 < poly.size() && ok; ++v) {
            const Pt& a = poly[v];
            const Pt& b = poly[v + 1];
            if (a.y == 0 && v > 0 && a.x >= xlo && a.x <= xhi) ok = false;
            if (a.y == b.y) continue;
            if ((a.y > 0) == (b.y > 0) && a.y != 0 && b.y != 0) continue;
            Rat t = (Rat(0) - a.y) / (b.y - a.y);
            if (t <= 0 || t >= 1) continue;
            Rat x = a.x + (b.x - a.x) * t;
            if (x >= xlo && x <= xhi) ok = false;
        }
        if (!ok) continue;
        Rat area(0);
        size_t pn = poly.size();
        for (size_t v = 0; v < pn; ++v)
            area += cross(poly[v], poly[(v + 1) % pn]);
        if (area == 0) continue;
        // Both corners must be convex so that the disk has Maslov index one.
        auto convex = [&](size_t idx) {
            const Pt& prev = poly[(idx + pn - 1) % pn];
            const Pt& cur = poly[idx];
            const Pt& nxt = poly[(idx + 1) % pn];
            Rat turn = cross(cur - prev, nxt - cur);
            return turn != 0 && (turn > 0) == (area > 0);
        };
        if (!convex(0) || !convex(pn - 1)) continue;
        Bigon b;
        b.nz = count_inside(poly, ld.diagram.z);
        b.nw = count_inside(poly, ld.diagram.w);
        bool ccw = area > 0;
        if (ccw == cv.bigon_from_ccw) {
            b.from = i;
            b.to = j;
        } else {
            b.from = j;
            b.to = i;
        }
        out.push_back(b);
    }
    return out;
}

KnotComplex build_cfk(const LiftedDiagram& ld, const Conventions& cv) {
    size_t N = ld.points.size();
    if (N == 0) throw std::logic_error("no intersection points");
    auto bigons = find_bigons(ld, cv);

    // Relative gradings by propagation over the bigon graph.
    std::vector<long> M(N, 0), A(N, 0);
    std::vector<char> seen(N, 0);
    std::vector<std::vector<size_t>> adj(N);
    for (size_t b = 0; b < bigons.size(); ++b) {
        adj[bigons[b].from].push_back(b);
        adj[bigons[b].to].push_back(b);
    }
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t bi : adj[v]) {
            const Bigon& b = bigons[bi];
            long dm = 1 - 2 * b.nw;      // M(from) - M(to)
            long da = b.nz - b.nw;       // A(from) - A(to)
            size_t o = (b.from == v) ? b.to : b.from;
            long mo = (b.from == v) ? M[v] - dm : M[v] + dm;
            long ao = (b.from == v) ? A[v] - da : A[v] + da;
            if (!seen[o]) {
                seen[o] = 1;
                ++visited;
                M[o] = mo;
                A[o] = ao;
                stack.push_back(o);
            } else if (M[o] != mo || A[o] != ao) {
                throw std::logic_error("inconsistent relative gradings");
            }
        }
    }
    if (visited != N)
        throw DisconnectedGradingGraph("bigon graph does not connect all generators");

    // Differential: parity of bigon counts per (from, to, nw).
    std::map<std::tuple<size_t, size_t, long>, int> parity;
    for (const auto& b : bigons) parity[{b.from, b.to, b.nw}] ^= 1;

    // Absolute Alexander grading from the symmetry of the associated graded
    // homology ranks.
    {
        std::set<std::pair<int, int>> arrows;
        for (const auto& [key, p] : parity) {
            auto [f, t, nw] = key;
            if (!p) continue;
            // associated graded: arrows that preserve Alexander and cross no
            // basepoint
            bool graded = (nw == 0) && (A[f] == A[t]);
            if (graded) {
                // nz must also vanish; A[f]==A[t] and nw==0 imply nz==0.
                arrows.insert({(int)f, (int)t});
            }
        }
        auto surv = cancel_all((int)N, arrows);
        long total = (long)surv.size();
        long wsum = 0;
        for (int s : surv) wsum += A[s];
        if (total == 0) throw std::logic_error("empty knot Floer homology");
        if ((2 * wsum) % (2 * total) != 0 && (2 * wsum) % total != 0)
            throw std::logic_error("Alexander symmetry defect is fractional");
        // center = wsum / total must be an integer for a knot
        if (wsum % total != 0)
            throw std::logic_error("non-integral Alexander center");
        long center = wsum / total;
        std::map<long, long> ranks;
        for (int s : surv) ranks[A[s] - center]++;
        for (const auto& [a, r] : ranks)
            if (ranks.count(-a) == 0 || ranks.at(-a) != r)
                throw std::logic_error("Alexander ranks are not symmetric");
        for (size_t i = 0; i < N; ++i) A[i] -= center;
    }

    // Absolute Maslov grading: the U = 0 homology is a single copy of the
    // ground field, pinned to degree 0.
    {
        std::set<std::pair<int, int>> arrows;
        for (const auto& [key, p] : parity) {
            auto [f, t, nw] = key;
            if (p && nw == 0) arrows.insert({(int)f, (int)t});
        }
        auto surv = cancel_all((int)N, arrows);
        if (surv.size() != 1)
            throw std::logic_error("U=0 homology does not have rank one");
        long shift = M[surv[0]];
        for (size_t i = 0; i < N; ++i) M[i] -= shift;
    }

    KnotComplex out;
    for (size_t i = 0; i < N; ++i)
        out.generators.push_back({"x" + std::to_string(i + 1), M[i], A[i]});
    for (const auto& [key, p] : parity) {
        if (!p) continue;
        auto [f, t, nw] = key;
        out.differential.push_back(
            {out.generators[f].name, out.generators[t].name, nw});
    }
    std::sort(out.differential.begin(), out.differential.end(),
              [](const CFKArrow& a, const CFKArrow& b) {
                  return std::tie(a.from, a.to, a.u_power) <
                         std::tie(b.from, b.to, b.u_power);
              });

    // d^2 = 0 over F2[U].
    std::map<std::tuple<std::string, std::string, long>, int> sq;
    for (const auto& a : out.differential)
        for (const auto& b : out.differential)
            if (a.to == b.from) sq[{a.from, b.to, a.u_power + b.u_power}] ^= 1;
    for (const auto& [k, v] : sq)
        if (v) throw std::logic_error("differential does not square to zero");
    return out;
}

KnotComplex build_cfk(const KnotSpec& spec, const Conventions& cv) {
    return build_cfk(build_lifted(spec, cv), cv);
}

std::map<long, long> alexander_polynomial(const KnotComplex& c) {
    std::map<long, long> out;
    for (const auto& g : c.generators)
        out[g.alexander] += (g.maslov % 2 == 0) ? 1 : -1;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::string complex_to_json(const KnotComplex& c) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : c.generators)
        j["generators"].push_back(
            {{"name", g.name}, {"maslov", g.maslov}, {"alexander", g.alexander}});
    j["differential"] = nlohmann::json::array();
    for (const auto& a : c.differential)
        j["differential"].push_back(
            {{"from", a.from}, {"to", a.to}, {"u_power", a.u_power}});
    return j.dump(2);
}

KnotComplex complex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    KnotComplex c;
    try {
        for (const auto& g : j.at("generators"))
            c.generators.push_back({g.at("name").get<std::string>(),
                                    g.at("maslov").get<long>(),
                                    g.at("alexander").get<long>()});
        for (const auto& a : j.value("differential", nlohmann::json::array()))
            c.differential.push_back({a.at("from").get<std::string>(),
                                      a.at("to").get<std::string>(),
                                      a.at("u_power").get<long>()});
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("bad complex JSON: ") + e.what());
    }
    for (const auto& a : c.differential)
        if (c.index_of(a.from) < 0 || c.index_of(a.to) < 0)
            throw SyntaxError("differential references unknown generator");
    return c;
}

bool same_bigraded_shape(const KnotComplex& a, const KnotComplex& b) {
    auto gens = [](const KnotComplex& c) {
        std::multiset<std::pair<long, long>> s;
        for (const auto& g : c.generators) s.insert({g.alexander, g.maslov});
        return s;
    };
    auto arrows = [](const KnotComplex& c) {
        std::multiset<std::tuple<long, long, long, long, long>> s;
        for (const auto& ar : c.differential) {
            const auto& f = c.generators[c.index_of(ar.from)];
            const auto& t = c.generators[c.index_of(ar.to)];
            s.insert({f.alexander, f.maslov, t.alexander, t.maslov, ar.u_power});
        }
        return s;
    };
    return gens(a) == gens(b) && arrows(a) == arrows(b);
}

}  // namespace floerkit
