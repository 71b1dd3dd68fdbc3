#pragma once

#include "hyperchow/abelian.hpp"

namespace hyperchow {

// Gale dual of beta: Z^m -> N, computed through a free presentation
// Z^r --q--> Z^{d+r} --> N -> 0, a lift B of beta, and
// DG(beta) = coker([B q]^T : Z^{d+r} -> Z^{m+r}).
struct GaleDual {
    FgAbGroup dg;
    GroupHom beta_dual;  // Z^m -> dg, columns a_1..a_m
    IntMatrix lift;      // (d+r) x m lift B
    IntMatrix rel_q;     // (d+r) x r relation columns of N
    CokernelResult coker;  // of [B q]^T, ambient Z^{m+r}

    // free parts of the a_i as rows of a (rank dg) x m matrix; the rows are
    // also the coefficient vectors of the hypertoric quadrics
    IntMatrix bar_dual_matrix() const;
};

// Requires every b_i nontorsion (TorsionGenerator) and coker(beta) finite
// (InfiniteCokernel).
GaleDual gale_dual(const FgAbGroup& n, const std::vector<GroupElement>& b);

// The lift matrix of elements of n: columns are canonical coordinates.
IntMatrix lift_matrix(const FgAbGroup& n, const std::vector<GroupElement>& b);

// beta as a GroupHom Z^m -> N.
GroupHom beta_hom(const FgAbGroup& n, const std::vector<GroupElement>& b);

// Hom(-, Z) applied to f, as a map between the free duals (transpose of the
// free block).
GroupHom dual_map(const GroupHom& f);

// Solves f(psi) = sign * target exactly over the free source Z^m and returns
// the canonical coset representative (particular solution reduced by the
// Hermite basis of the solution lattice). NotInImage if unsolvable.
std::vector<Int> solve_lift(const GroupHom& f, const GroupElement& target, int sign);

// Kernel lattice { x in Z^m : f(x) = 0 } as Hermite column basis.
IntMatrix hom_kernel_lattice(const GroupHom& f);

}  // namespace hyperchow
