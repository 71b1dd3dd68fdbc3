#pragma once

#include "hyperchow/abelian.hpp"
#include "hyperchow/multifan.hpp"

namespace hyperchow {

// (v, sigma) with bar(v) = sum_{i in sigma} alpha_i bar(b_i), 0 < alpha_i < 1.
// sigma is forced minimal by the strict bounds; torsion elements pair with
// the zero cone.
struct BoxElement {
    GroupElement v;
    Cone sigma;
    std::vector<Rat> alphas;  // aligned with sigma.indices()

    bool operator==(const BoxElement& o) const { return v == o.v && sigma == o.sigma; }
    bool operator<(const BoxElement& o) const {
        if (!(sigma == o.sigma)) return sigma < o.sigma;
        return v < o.v;
    }
    std::string str() const;
};

// Decomposition of a pair (c, sigma): c = v + sum_{i in sigma} m_i b_i with
// (v, tau) a box element, tau inside sigma, m_i >= 0.
struct FanElement {
    GroupElement c;
    Cone sigma;
    BoxElement box;
    std::vector<Int> exponents;  // global length m, support inside sigma
};

// Ceiling-function calculus over a fixed multi-fan.
class BoxCalc {
  public:
    BoxCalc(const FgAbGroup& n, const std::vector<GroupElement>& b, const MultiFan& fan)
        : n_(&n), b_(&b), fan_(&fan) {}

    const MultiFan& fan() const { return *fan_; }
    const FgAbGroup& group() const { return *n_; }

    std::vector<BoxElement> enumerate_box() const;

    // NotRepresentable if sigma is not a cone, bar(c) lies outside its span,
    // or a coefficient is negative.
    FanElement fractional_part(const GroupElement& c, const Cone& sigma) const;

    GroupElement ceiling(const GroupElement& c, const Cone& sigma) const;

    // NotACone if the union is dependent.
    std::pair<GroupElement, Cone> epsilon(const GroupElement& c1, const Cone& s1,
                                          const GroupElement& c2, const Cone& s2) const;

    BoxElement box_inverse(const BoxElement& box) const;
    BoxElement third_box(const BoxElement& b1, const BoxElement& b2) const;

    Int degree(const GroupElement& c, const Cone& sigma) const;
    Int degree(const BoxElement& box) const { return box.sigma.size(); }

    GroupElement sum_b(const Cone& sigma) const;

    // Validates the pair (v, sigma) as a box element.
    bool is_box(const GroupElement& v, const Cone& sigma) const;

  private:
    const FgAbGroup* n_;
    const std::vector<GroupElement>* b_;
    const MultiFan* fan_;
};

}  // namespace hyperchow
