// Scratch: sanity-check a twist map's cell complex (fold / degeneracy hunt).
#include <cstdio>

#include "floerkit/cfk.hpp"

using namespace floerkit;

int main(int argc, char** argv) {
    Conventions cv;
    int sgn = argc > 1 ? atoi(argv[1]) : -1;
    int gen = argc > 2 ? atoi(argv[2]) : 2;
    PLMap m = twist_map(gen, sgn, cv);
    printf("cells=%zu\n", m.cells.size());
    int neg = 0, zero = 0;
    for (size_t i = 0; i < m.cells.size(); ++i) {
        const auto& c = m.cells[i];
        Rat det = c.f.b00 * c.f.b11 - c.f.b01 * c.f.b10;
        if (det < 0) {
            ++neg;
            printf("cell %zu det<0, poly:", i);
            for (const auto& p : c.poly)
                printf(" (%s,%s)", p.x.str().c_str(), p.y.str().c_str());
            printf("\n");
        } else if (det == 0) {
            ++zero;
            printf("cell %zu det==0\n", i);
        }
    }
    printf("neg=%d zero=%d\n", neg, zero);
    return 0;
}
