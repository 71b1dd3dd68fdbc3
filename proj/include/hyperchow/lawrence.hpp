#pragma once

#include <string>

#include "hyperchow/arrangement.hpp"

namespace hyperchow {

// One maximal cone of the Lawrence fan together with the cobasis that
// produced it. Ray ids: i in 0..m-1 is the z-ray (b_{L,i+1}), m+i the w-ray
// (b'_{L,i+1}).
struct LawrenceCone {
    std::vector<int> cobasis;      // indices i_1 < ... < i_{m-d}
    std::vector<Rat> lambda;       // expansion coefficients of bar(theta)
    std::vector<int> monomial;     // ray ids whose variables form prod C(theta)
    std::vector<int> maximal_cone; // complement ray ids, sorted
};

struct LawrenceData {
    FgAbGroup n_lawrence;                  // N + Z^m
    std::vector<GroupElement> vectors;     // b_{L,1..m} then b'_{L,1..m}
    std::vector<LawrenceCone> fan;         // one per cobasis; empty until lawrence_fan
    std::vector<std::vector<Int>> ideal;   // hypertoric quadric coefficient rows
};

// Vectors-only lifting beta_L = beta + id.
LawrenceData lawrence_lift(const FgAbGroup& n, const std::vector<GroupElement>& b);

// Full fan + irrelevant monomials; NonGeneric if a cobasis coefficient is 0.
LawrenceData lawrence_fan(const StackyArrangement& a);

// One generator sum_i (beta_dual)*(x)_i z_i w_i per basis covector x of
// DG(beta)*; returned as coefficient rows (length m).
std::vector<std::vector<Int>> hypertoric_ideal(const StackyArrangement& a);

// Paired-index projection of a Lawrence cone (by ray ids) into the multi-fan.
Cone project_cone(const MultiFan& fan, int m, const std::vector<int>& lawrence_rays);

// Plain-text polynomial rendering for the exports.
std::string quadric_to_string(const std::vector<Int>& row);
std::string monomial_to_string(const std::vector<int>& rays, int m);

}  // namespace hyperchow
