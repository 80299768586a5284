// Scratch: trace the epsilon normalization of one knot under chosen flags.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "floerkit/cfk.hpp"

using namespace floerkit;

static std::string rs(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
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
    if (argc > 8) cv.merid_sep = atoi(argv[8]);
    if (argc > 9) cv.merid_right = atoi(argv[9]);
    if (argc > 10) cv.t2_double = atoi(argv[10]);
    if (argc > 11) cv.zw_pair = atoi(argv[11]);
    if (argc > 12) cv.bigon_from_ccw = atoi(argv[12]);
    std::string text = argc > 13 ? argv[13]
                                 : "K(1, T2^2 T3^2 T2^2 T3^-2 T2^-2)";
    auto spec = parse_knot_spec(text);
    HeegaardDiagram d = initial_diagram(cv);
    if (getenv("FLOERKIT_NO_INTERMEDIATE_REDUCE")) {
        std::vector<BraidLetter> order = spec.sigma.letters;
        if (!cv.left_first) std::reverse(order.begin(), order.end());
        for (const auto& letter : order) {
            PLMap m = twist_map(letter.gen, letter.exp, cv);
            long reps = (letter.gen == 2) ? std::labs(letter.exp) / 2
                                          : std::labs(letter.exp);
            for (long r = 0; r < reps; ++r) d.alpha = m.apply(d.alpha);
            printf("after T%d^%ld: hol=(%ld,%ld) verts=%zu\n", letter.gen,
                   letter.exp, d.alpha.hol_x, d.alpha.hol_y, d.alpha.size());
        }
    } else {
        d = apply_braid(spec.sigma, d, cv);
    }
    d = reduce_curve(d);
    printf("pre-norm: hol=(%ld,%ld) verts=%zu beta=%zu\n", d.alpha.hol_x,
           d.alpha.hol_y, d.alpha.size(), geometric_intersection(d));
    for (const auto& v : d.alpha.verts)
        printf("  (%s, %s)\n", rs(v.x).c_str(), rs(v.y).c_str());
    try {
        auto [nd, k] = normalize_epsilon(d, spec.epsilon, cv);
        printf("normalized: k=%ld hol=(%ld,%ld) verts=%zu beta=%zu\n", k,
               nd.alpha.hol_x, nd.alpha.hol_y, nd.alpha.size(),
               geometric_intersection(nd));
        for (const auto& v : nd.alpha.verts)
            printf("  (%s, %s)\n", rs(v.x).c_str(), rs(v.y).c_str());
        auto c = build_cfk(spec, cv);
        printf("complex: n=%zu\n", c.generators.size());
        for (const auto& g : c.generators)
            printf("  %s (%ld;%ld)\n", g.name.c_str(), g.alexander, g.maslov);
        for (const auto& a : c.differential)
            printf("  d %s -> %s U^%d\n", a.from.c_str(), a.to.c_str(),
                   a.u_power);
    } catch (const std::exception& e) {
        printf("EXC %s\n", e.what());
    }
    return 0;
}
