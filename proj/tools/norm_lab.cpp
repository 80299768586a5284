// Scratch: hunt for the meridian placement whose smoothing yields the
// reference nine-generator complex.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "../core/src/curve_detail.hpp"
#include "floerkit/cfk.hpp"

using namespace floerkit;
using namespace floerkit::detail;

static TorusCurve vert_copy(const Rat& x, int tdir) {
    TorusCurve m;
    m.verts = {{x, Rat(1, 16)}};
    m.hol_x = 0;
    m.hol_y = tdir;
    return m;
}

static TorusCurve sep_copy(const Rat& dl, const Rat& dr, const Rat& yjog,
                           bool mirror, int tdir, const Rat& shift) {
    Rat xl = Rat(1, 2) - dl, xr = Rat(1, 2) + dr;
    Rat ylo(-1, 8), e(1, 512);
    TorusCurve m;
    m.verts = {{xl, ylo}, {xl, yjog}, {xr, yjog + e}, {xr, ylo + 1 - e}};
    m.hol_x = 0;
    m.hol_y = 1;
    if (mirror)
        for (auto& v : m.verts) v.x = 1 - v.x;
    for (auto& v : m.verts) v.x += shift;
    if (tdir < 0) {
        std::reverse(m.verts.begin(), m.verts.end());
        m.hol_y = -1;
    }
    return m;
}

static void trial(const char* tag, const HeegaardDiagram& base,
                  const std::vector<TorusCurve>& mers, long target,
                  const Conventions& cv) {
    try {
        HeegaardDiagram d = base;
        d.alpha = splice_meridian(base.alpha, mers);
        d = reduce_curve(d);
        if (d.alpha.hol_y != target) {
            printf("%-40s hol=(%ld,%ld) off-target\n", tag, d.alpha.hol_x,
                   d.alpha.hol_y);
            return;
        }
        auto ld = lift(d);
        auto c = build_cfk(ld, cv);
        std::string digest;
        for (const auto& g : c.generators)
            digest += " (" + std::to_string(g.alexander) + ";" +
                      std::to_string(g.maslov) + ")";
        printf("%-40s n=%zu arrows=%zu%s\n", tag, c.generators.size(),
               c.differential.size(), digest.c_str());
    } catch (const std::exception& e) {
        printf("%-40s EXC %s\n", tag, e.what());
    }
}

int main(int argc, char** argv) {
    Conventions cv;
    if (argc > 1) cv.s2 = atoi(argv[1]);
    if (argc > 2) cv.s3 = atoi(argv[2]);
    if (argc > 3) cv.side2_right = atoi(argv[3]);
    if (argc > 4) cv.alpha_right = atoi(argv[4]);
    if (argc > 5) cv.left_first = atoi(argv[5]);
    if (argc > 6) cv.orient_eps = atoi(argv[6]);
    if (argc > 7) cv.zw_swap = atoi(argv[7]);
    if (argc > 8) cv.zw_pair = atoi(argv[8]);
    if (argc > 9) cv.bigon_from_ccw = atoi(argv[9]);
    std::string word = argc > 10 ? argv[10] : "T2^2 T3^2 T2^2 T3^-2 T2^-2";
    auto sigma = parse_braid(word);
    HeegaardDiagram d = initial_diagram(cv);
    d = apply_braid(sigma, d, cv);
    d = reduce_curve(d);
    printf("pre-norm hol=(%ld,%ld) beta=%zu\n", d.alpha.hol_x, d.alpha.hol_y,
           geometric_intersection(d));
    long target = cv.orient_eps;  // epsilon = +1
    long k = target - d.alpha.hol_y;
    if (k == 0) {
        printf("k=0, nothing to try\n");
        return 0;
    }
    int tdir = k > 0 ? 1 : -1;
    long kk = std::labs(k);
    char tag[128];
    // Family A: tight stacks of plain vertical copies at varying columns.
    for (int num = 1; num < 32; num += 2) {
        std::vector<TorusCurve> mers;
        for (long j = 0; j < kk; ++j)
            mers.push_back(vert_copy(Rat(num, 32) + Rat(j, 512) + Rat(1, 4096),
                                     tdir));
        snprintf(tag, sizeof tag, "A x0=%d/32", num);
        trial(tag, d, mers, target, cv);
    }
    // Family B: copies spread evenly around the torus.
    for (int num = 1; num <= 7; num += 2) {
        std::vector<TorusCurve> mers;
        for (long j = 0; j < kk; ++j)
            mers.push_back(vert_copy(Rat(num, 64) + Rat(j, kk) + Rat(1, 4096),
                                     tdir));
        snprintf(tag, sizeof tag, "B x0=%d/64 spread", num);
        trial(tag, d, mers, target, cv);
    }
    // Family C: zigzag copies, varying leg width, jog height, mirror.
    {
        const Rat dds[] = {Rat(1, 4), Rat(3, 16), Rat(1, 8), Rat(1, 16),
                           Rat(1, 32), Rat(1, 128)};
        const Rat yjs[] = {Rat(1, 16), Rat(3, 16), Rat(5, 16), Rat(1, 2),
                           Rat(5, 8),  Rat(11, 16), Rat(13, 16), Rat(15, 16)};
        for (const Rat& dd : dds)
            for (const Rat& yjog : yjs)
                for (int mir = 0; mir < 2; ++mir) {
                    std::vector<TorusCurve> mers;
                    for (long j = 0; j < kk; ++j)
                        mers.push_back(sep_copy(dd, dd, yjog, mir, tdir,
                                                Rat(j, 2048) + Rat(1, 8192)));
                    snprintf(tag, sizeof tag, "C d=%ld/%ld yj=%ld/%ld mir=%d",
                             (long)numerator(dd).convert_to<long>(),
                             (long)denominator(dd).convert_to<long>(),
                             (long)numerator(yjog).convert_to<long>(),
                             (long)denominator(yjog).convert_to<long>(), mir);
                    trial(tag, d, mers, target, cv);
                }
    }
    // Family D: copies split between the two side columns.
    for (long nl = 0; nl <= kk; ++nl) {
        std::vector<TorusCurve> mers;
        for (long j = 0; j < kk; ++j) {
            Rat base = (j < nl) ? Rat(7, 32) : Rat(23, 32);
            mers.push_back(vert_copy(base + Rat(j, 512) + Rat(1, 4096), tdir));
        }
        snprintf(tag, sizeof tag, "D left=%ld right=%ld", nl, kk - nl);
        trial(tag, d, mers, target, cv);
    }
    // Family E: alternating columns.
    {
        std::vector<TorusCurve> mers;
        for (long j = 0; j < kk; ++j) {
            Rat base = (j % 2) ? Rat(23, 32) : Rat(7, 32);
            mers.push_back(vert_copy(base + Rat(j, 512) + Rat(1, 4096), tdir));
        }
        trial("E alternating", d, mers, target, cv);
    }
    return 0;
}
