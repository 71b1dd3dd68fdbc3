#pragma once

#include "hyperchow/arrangement.hpp"
#include "hyperchow/boxes.hpp"

namespace hyperchow {

// Quotient stacky hyperplane arrangement A(sigma) attached to a box element:
// N(sigma) = N / <b_i : i in sigma>, beta(sigma) over link(sigma), theta(sigma)
// transported through the Gale-dual diagrams.
struct QuotientArrangement {
    BoxElement box;
    StackyArrangement arr;
    std::vector<int> link_indices;  // ascending; arr's ray j is parent ray link_indices[j]
};

// 3-twisted sector datum: ordered box triple with completion condition,
// coefficients a_i of bar(v1)+bar(v2)+bar(v3) over sigma123, and the sets I, J
// entering the product sign.
struct SectorTriple {
    std::array<int, 3> box_index;
    Cone sigma123;
    std::vector<Int> a_coeffs;  // aligned with sigma123.indices(), each 1 or 2
    Cone i_set;                 // a_i = 1 and all three alphas exist
    Cone j_set;                 // in sigma123 but not in sigma_3
};

// NotABox if (v, sigma) is not a box element of the fan.
QuotientArrangement quotient_arrangement(const StackyArrangement& a, const MultiFan& fan,
                                         const BoxElement& box);

struct InertiaComponent {
    BoxElement box;
    QuotientArrangement quotient;
    int age;  // = |sigma|
};
std::vector<InertiaComponent> inertia_components(const StackyArrangement& a, const MultiFan& fan);

// Local group of a top-dimensional chart: N / <b_i : i in sigma>.
// NotTopDimensional unless |sigma| = d.
FgAbGroup local_group(const StackyArrangement& a, const MultiFan& fan, const Cone& sigma_top);

std::vector<SectorTriple> three_twisted_sectors(const StackyArrangement& a, const MultiFan& fan,
                                                const std::vector<BoxElement>& boxes);

// Index data of the obstruction-bundle Euler class: ({i : a_i = 2}, I).
// Both empty (rank zero) unless all three bar(v_i) are nonzero.
std::pair<Cone, Cone> obstruction_euler_data(const SectorTriple& t, const std::vector<BoxElement>& boxes);

}  // namespace hyperchow
