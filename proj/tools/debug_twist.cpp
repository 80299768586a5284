// Scratch: inspect the raw image of alpha under twist powers, pre-reduction.
#include <cstdio>

#include "floerkit/cfk.hpp"

using namespace floerkit;

int main(int argc, char** argv) {
    Conventions cv;
    int reps = argc > 1 ? atoi(argv[1]) : 2;
    int gen = argc > 2 ? atoi(argv[2]) : 2;
    int sgn = reps < 0 ? -1 : 1;
    HeegaardDiagram d = initial_diagram(cv);
    PLMap m = twist_map(gen, sgn, cv);
    for (int r = 0; r < abs(reps); ++r) {
        d.alpha = m.apply(d.alpha);
        printf("rep %d: verts=%zu geom=%zu embedded=%d\n", r + 1,
               d.alpha.size(), geometric_intersection(d),
               (int)curve_embedded_on_torus(d.alpha));
    }
    for (size_t i = 0; i < d.alpha.size() && i < 40; ++i) {
        const auto& v = d.alpha.verts[i];
        printf("  (%s, %s)\n", v.x.str().c_str(), v.y.str().c_str());
    }
    HeegaardDiagram r = reduce_curve(d);
    printf("post-reduce: verts=%zu geom=%zu\n", r.alpha.size(),
           geometric_intersection(r));
    for (size_t i = 0; i < r.alpha.size() && i < 40; ++i) {
        const auto& v = r.alpha.verts[i];
        printf("  (%s, %s)\n", v.x.str().c_str(), v.y.str().c_str());
    }
    return 0;
}
