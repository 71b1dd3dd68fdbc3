#include "hyperchow/gale.hpp"

#include <cassert>

#include "hyperchow/errors.hpp"

namespace hyperchow {

IntMatrix GaleDual::bar_dual_matrix() const {
    std::vector<int> rows;
    for (int i = 0; i < dg.free_rank; ++i) rows.push_back(i);
    return select_rows(beta_dual.matrix, rows);
}

IntMatrix lift_matrix(const FgAbGroup& n, const std::vector<GroupElement>& b) {
    IntMatrix m(n.coords(), int(b.size()));
    for (size_t i = 0; i < b.size(); ++i) m.set_col(int(i), b[i].coords());
    return m;
}

GroupHom beta_hom(const FgAbGroup& n, const std::vector<GroupElement>& b) {
    FgAbGroup zm{int(b.size()), {}};
    return make_hom(zm, n, lift_matrix(n, b));
}

GaleDual gale_dual(const FgAbGroup& n, const std::vector<GroupElement>& b) {
    const int m = int(b.size());
    const int d = n.free_rank;
    const int r = int(n.torsion.size());

    for (int i = 0; i < m; ++i)
        if (b[i].is_torsion())
            fail(Errc::TorsionGenerator, "b_" + std::to_string(i + 1) + " is torsion");

    IntMatrix bar(d, m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < d; ++k) bar.at(k, i) = b[i].free[k];
    if (rank_rational(bar) != d) fail(Errc::InfiniteCokernel, "coker(beta) is infinite");

    GaleDual g;
    g.lift = lift_matrix(n, b);
    g.rel_q = n.relation_columns();
    IntMatrix e = hcat(g.lift, g.rel_q);  // (d+r) x (m+r)

    FgAbGroup ambient{m + r, {}};
    FgAbGroup src{d + r, {}};
    GroupHom rel = make_hom(src, ambient, e.transposed());
    g.coker = cokernel(rel);
    g.dg = g.coker.group;

    IntMatrix bd(g.dg.coords(), m);
    for (int i = 0; i < m; ++i) {
        std::vector<Int> unit(m + r, Int(0));
        unit[i] = 1;
        bd.set_col(i, apply(g.coker.proj, unit).coords());
    }
    FgAbGroup zm{m, {}};
    g.beta_dual = make_hom(zm, g.dg, std::move(bd));
    return g;
}

GroupHom dual_map(const GroupHom& f) {
    std::vector<int> rows;
    for (int i = 0; i < f.target.free_rank; ++i) rows.push_back(i);
    IntMatrix free_block = select_rows(f.matrix, rows);
    std::vector<int> cols;
    for (int j = 0; j < f.source.free_rank; ++j) cols.push_back(j);
    free_block = select_cols(free_block, cols);
    FgAbGroup s{f.target.free_rank, {}};
    FgAbGroup t{f.source.free_rank, {}};
    return make_hom(s, t, free_block.transposed());
}

IntMatrix hom_kernel_lattice(const GroupHom& f) {
    assert(f.source.torsion.empty());
    const int m = f.source.free_rank;
    IntMatrix aug = hcat(f.matrix, f.target.relation_columns());
    IntMatrix ker = integer_kernel(aug);
    // keep the source components, as a lattice
    std::vector<int> rows;
    for (int i = 0; i < m; ++i) rows.push_back(i);
    return hermite_column_basis(select_rows(ker, rows));
}

std::vector<Int> solve_lift(const GroupHom& f, const GroupElement& target, int sign) {
    assert(sign == 1 || sign == -1);
    GroupElement rhs = (sign == 1) ? target : neg(f.target, target);
    auto sol = hom_solve(f, rhs);
    if (!sol) fail(Errc::NotInImage, "no integral lift exists");
    IntMatrix ker = hom_kernel_lattice(f);
    return reduce_mod_lattice(sol->coords(), ker);
}

}  // namespace hyperchow
