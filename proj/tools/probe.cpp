// Scratch: print the complex of a few words under chosen convention flags.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "floerkit/cfk.hpp"

using namespace floerkit;

int main(int argc, char** argv) {
    Conventions cv;
    if (argc > 1) cv.s2 = atoi(argv[1]);
    if (argc > 2) cv.s3 = atoi(argv[2]);
    if (argc > 3) cv.side2_right = atoi(argv[3]);
    if (argc > 4) cv.alpha_right = atoi(argv[4]);
    if (argc > 5) cv.left_first = atoi(argv[5]);
    if (argc > 6) cv.orient_eps = atoi(argv[6]);
    if (argc > 7) cv.zw_swap = atoi(argv[7]);
    if (argc > 8) cv.bigon_from_ccw = atoi(argv[8]);
    if (argc > 9) cv.t2_double = atoi(argv[9]);
    if (argc > 10) cv.merid_sep = atoi(argv[10]);
    if (argc > 11) cv.merid_right = atoi(argv[11]);
    const char* words[] = {"T2^2 T3^2",   "T2^-2 T3^2", "T2^2 T3^-2",
                           "T2^-2 T3^-2", "T3^2 T2^2",  "T3^2 T2^-2"};
    for (const char* w : words)
        for (int eps = -1; eps <= 1; eps += 2) {
            std::string text =
                "K(" + std::to_string(eps) + ", " + std::string(w) + ")";
            printf("%-22s : ", text.c_str());
            try {
                auto spec = parse_knot_spec(text);
                auto c = build_cfk(spec, cv);
                printf("n=%zu ", c.generators.size());
                for (const auto& g : c.generators)
                    printf("(%ld;%ld) ", g.alexander, g.maslov);
                printf("arrows=%zu", c.differential.size());
            } catch (const std::exception& e) {
                printf("EXC %s", e.what());
            }
            printf("\n");
        }
    return 0;
}
