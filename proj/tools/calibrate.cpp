// Convention sweep: find the combination of geometric convention flags that
// reproduces the expected reference complexes.  Development aid, not
// installed.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>

#include "floerkit/cfk.hpp"

using namespace floerkit;

static bool has_arrow(const KnotComplex& c, const std::string& f,
                      const std::string& t) {
    for (const auto& a : c.differential)
        if (a.from == f && a.to == t) return true;
    return false;
}

int main(int argc, char** argv) {
    bool verbose = argc > 1 && !strcmp(argv[1], "-v");
    std::multiset<std::pair<long, long>> left_trefoil{{1, 2}, {0, 1}, {-1, 0}};
    std::multiset<std::pair<long, long>> right_trefoil{{1, 0}, {0, -1}, {-1, -2}};
    auto spec3 = parse_knot_spec("K(1, T2^-2 T3^1 T2^2)");
    auto spec9 = parse_knot_spec("K(1, T2^2 T3^2 T2^2 T3^-2 T2^-2)");
    for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2)
            for (int td = 0; td < 2; ++td)
            for (int sr = 0; sr < (td ? 1 : 2); ++sr)
            for (int ar = 0; ar < 2; ++ar)
            for (int ms = 0; ms < 2; ++ms)
            for (int mr = 0; mr < 2; ++mr)
            for (int lf = 0; lf < 2; ++lf)
                for (int oe = -1; oe <= 1; oe += 2)
                    for (int zp = 0; zp < 6; ++zp)
                    for (int zw = 0; zw < 2; ++zw)
                        for (int bc = 0; bc < 2; ++bc) {
                            Conventions cv;
                            cv.s2 = s2;
                            cv.s3 = s3;
                            cv.t2_double = td;
                            cv.side2_right = sr;
                            cv.alpha_right = ar;
                            cv.merid_sep = ms;
                            cv.merid_right = mr;
                            cv.left_first = lf;
                            cv.orient_eps = oe;
                            cv.zw_pair = zp;
                            cv.zw_swap = zw;
                            cv.bigon_from_ccw = bc;
                            auto tstart = std::chrono::steady_clock::now();
                            std::string verdict;
                            try {
                                auto c = build_cfk(spec3, cv);
                                std::multiset<std::pair<long, long>> got;
                                for (const auto& g : c.generators)
                                    got.insert({g.alexander, g.maslov});
                                if (got == left_trefoil)
                                    verdict = "LEFT";
                                else if (got == right_trefoil)
                                    verdict = "RIGHT";
                                else {
                                    verdict = "other:";
                                    for (auto& p : got)
                                        verdict += " (" + std::to_string(p.first) +
                                                   ";" + std::to_string(p.second) + ")";
                                }
                            } catch (const std::exception& e) {
                                verdict = std::string("EXC:") + e.what();
                            }
                            auto elapsed = std::chrono::duration_cast<
                                               std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - tstart)
                                               .count();
                            if (verbose || verdict == "LEFT")
                                printf("s2=%+d s3=%+d td=%d sr=%d ar=%d ms=%d mr=%d lf=%d oe=%+d zp=%d zw=%d bc=%d -> %s (%lldms)\n",
                                       s2, s3, td, sr, ar, ms, mr, lf, oe, zp, zw, bc,
                                       verdict.c_str(), (long long)elapsed);
                            fflush(stdout);
                            if (verdict != "LEFT") continue;
                            try {
                                auto c = build_cfk(spec9, cv);
                                bool ok = c.generators.size() == 9 &&
                                          has_arrow(c, "x2", "x1") &&
                                          has_arrow(c, "x2", "x3") &&
                                          has_arrow(c, "x1", "x4");
                                printf("    K9: n=%zu d(x2->x1)=%d d(x2->x3)=%d "
                                       "d(x1->x4)=%d %s\n",
                                       c.generators.size(),
                                       has_arrow(c, "x2", "x1"),
                                       has_arrow(c, "x2", "x3"),
                                       has_arrow(c, "x1", "x4"),
                                       ok ? "PASS" : "fail");
                            } catch (const std::exception& e) {
                                printf("    K9: EXC %s\n", e.what());
                            }
                            fflush(stdout);
                        }
    return 0;
}
