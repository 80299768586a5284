#pragma once
#include <map>
#include <string>
#include <vector>

#include "floerkit/braid.hpp"

namespace floerkit {

struct CFKGenerator {
    std::string name;
    long maslov = 0;
    long alexander = 0;
};

struct CFKArrow {
    std::string from, to;
    long u_power = 0;
};

struct KnotComplex {
    std::vector<CFKGenerator> generators;
    std::vector<CFKArrow> differential;

    int index_of(const std::string& name) const;
};

// Embedded empty bigon between consecutive intersection points of the two
// lifted arcs; from/to index into LiftedDiagram::points.
struct Bigon {
    size_t from, to;
    long nz = 0, nw = 0;
};

std::vector<Bigon> find_bigons(const LiftedDiagram& ld, const Conventions& cv);

KnotComplex build_cfk(const LiftedDiagram& ld, const Conventions& cv);
KnotComplex build_cfk(const KnotSpec& spec, const Conventions& cv);

// Euler characteristic in F_2[U]-free terms: exponent -> coefficient.
std::map<long, long> alexander_polynomial(const KnotComplex& c);

std::string complex_to_json(const KnotComplex& c);
KnotComplex complex_from_json(const std::string& text);

// True when the bigraded generator multisets and the per-bidegree arrow
// counts agree; a cheap but faithful distinguisher for small complexes.
bool same_bigraded_shape(const KnotComplex& a, const KnotComplex& b);

}  // namespace floerkit
