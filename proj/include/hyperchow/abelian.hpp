#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperchow/intmat.hpp"

namespace hyperchow {

// Finitely generated abelian group in canonical (Smith) coordinates:
// Z^free_rank + Z/n_1 + ... + Z/n_k with n_1 | n_2 | ... and each n_j >= 2.
struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    int coords() const { return free_rank + int(torsion.size()); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // finite groups only
    bool operator==(const FgAbGroup& o) const = default;
    std::string str() const;

    // Relation lattice of the presentation Z^coords -> group, as columns
    // (n_j at the torsion coordinates).
    IntMatrix relation_columns() const;
};

// Element in canonical coordinates of its group; residues reduced into [0, n_j).
struct GroupElement {
    std::vector<Int> free;
    std::vector<Int> res;

    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const;
    bool is_zero() const;
    bool is_torsion() const;  // free part zero
    std::vector<Int> coords() const;
    std::string str() const;
};

GroupElement make_element(const FgAbGroup& g, const std::vector<Int>& coords);
GroupElement zero_element(const FgAbGroup& g);
GroupElement add(const FgAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement sub(const FgAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const FgAbGroup& g, const GroupElement& x);
GroupElement scale(const FgAbGroup& g, const Int& c, const GroupElement& x);

// Natural map modulo torsion; additive.
inline const std::vector<Int>& bar(const GroupElement& x) { return x.free; }

// Homomorphism between groups in canonical coordinates. Columns of `matrix`
// are the images of the source's canonical generators.
struct GroupHom {
    FgAbGroup source, target;
    IntMatrix matrix;  // target.coords() x source.coords()
};

// Checks well-definedness: each source torsion generator of order n maps to
// an element killed by n.
GroupHom make_hom(const FgAbGroup& source, const FgAbGroup& target, IntMatrix matrix);

GroupElement apply(const GroupHom& f, const GroupElement& x);
GroupElement apply(const GroupHom& f, const std::vector<Int>& coords);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom identity_hom(const FgAbGroup& g);

// Solves f(x) = y; nullopt if y is not in the image.
std::optional<GroupElement> hom_solve(const GroupHom& f, const GroupElement& y);

// Cokernel target/(im f) in canonical form.
//   proj:    target -> group, the quotient map
//   section: target.coords() x group.coords(); integer representatives of the
//            quotient's canonical generators (proj . section = id)
struct CokernelResult {
    FgAbGroup group;
    GroupHom proj;
    IntMatrix section;
};
CokernelResult cokernel(const GroupHom& f);

GroupElement section_of(const CokernelResult& c, const GroupElement& x);

// Map on cokernels induced by an ambient map p with p(im f1) inside im f2.
GroupHom induced_on_cokernels(const CokernelResult& c1, const CokernelResult& c2, const IntMatrix& p);

}  // namespace hyperchow
