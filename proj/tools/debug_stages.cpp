// Scratch: print intersection counts after each pipeline stage.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "floerkit/cfk.hpp"

using namespace floerkit;

// Crossings of alpha with the straight arc z->w (over lattice translates).
static size_t arc_crossings(const HeegaardDiagram& d) {
    size_t count = 0;
    for (size_t i = 0; i < d.alpha.size(); ++i) {
        Pt a = d.alpha.seg_a(i), b = d.alpha.seg_b(i);
        for (long ux = -6; ux <= 6; ++ux)
            for (long uy = -6; uy <= 6; ++uy) {
                Pt z{d.z.x + ux, d.z.y + uy}, w{d.w.x + ux, d.w.y + uy};
                if (seg_intersect(a, b, z, w)) ++count;
            }
    }
    return count;
}

int main(int argc, char** argv) {
    Conventions cv;
    if (argc > 1) cv.s2 = atoi(argv[1]);
    if (argc > 2) cv.s3 = atoi(argv[2]);
    if (argc > 3) cv.side2_right = atoi(argv[3]);
    if (argc > 4) cv.alpha_right = atoi(argv[4]);
    if (argc > 5) cv.left_first = atoi(argv[5]);
    auto spec = parse_knot_spec(argc > 6 ? argv[6] : "K(1, T2^-2 T3^1 T2^2)");
    HeegaardDiagram d = initial_diagram(cv);
    printf("initial: verts=%zu geom=%zu hol=(%ld,%ld)\n", d.alpha.size(),
           geometric_intersection(d), d.alpha.hol_x, d.alpha.hol_y);
    HeegaardDiagram d1 = d;
    for (const auto& letter : spec.sigma.letters) {
        PLMap m = twist_map(letter.gen, letter.exp, cv);
        long reps = (letter.gen == 2) ? labs(letter.exp) / 2 : labs(letter.exp);
        for (long r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            d1.alpha = m.apply(d1.alpha);
            auto t1 = std::chrono::steady_clock::now();
            size_t pre = d1.alpha.size();
            size_t arc_pre = arc_crossings(d1);
            d1 = reduce_curve(d1);
            auto t2 = std::chrono::steady_clock::now();
            auto ms = [](auto a, auto b) {
                return std::chrono::duration_cast<std::chrono::milliseconds>(b - a)
                    .count();
            };
            printf("  rep: apply %lldms (%zu verts, arc=%zu) reduce %lldms (%zu verts, arc=%zu)\n",
                   (long long)ms(t0, t1), pre, arc_pre, (long long)ms(t1, t2),
                   d1.alpha.size(), arc_crossings(d1));
            fflush(stdout);
        }
        printf("after T%d^%ld: verts=%zu geom=%zu hol=(%ld,%ld) embedded=%d\n",
               letter.gen, letter.exp, d1.alpha.size(),
               geometric_intersection(d1), d1.alpha.hol_x, d1.alpha.hol_y,
               (int)curve_embedded_on_torus(d1.alpha));
    }
    HeegaardDiagram d2 = reduce_curve(d1);
    printf("reduced: verts=%zu geom=%zu hol=(%ld,%ld)\n", d2.alpha.size(),
           geometric_intersection(d2), d2.alpha.hol_x, d2.alpha.hol_y);
    return 0;
}
