#include "hyperchow/inertia.hpp"

#include <algorithm>
#include <cassert>

#include "hyperchow/errors.hpp"

namespace hyperchow {

namespace {

// Solves q * k = mat columnwise, where q is the relation-column matrix of a
// canonical group (zero block over diag(torsion)). The free rows of mat must
// vanish and the torsion rows divide exactly.
IntMatrix divide_by_relations(const FgAbGroup& g, const IntMatrix& mat) {
    const int d = g.free_rank;
    const int r = int(g.torsion.size());
    IntMatrix k(r, mat.cols());
    for (int j = 0; j < mat.cols(); ++j) {
        for (int i = 0; i < d; ++i)
            if (mat.at(i, j) != 0) fail(Errc::Internal, "free part of a relation lift is nonzero");
        for (int i = 0; i < r; ++i) {
            const Int& e = mat.at(d + i, j);
            if (e % g.torsion[i] != 0) fail(Errc::Internal, "relation lift not divisible");
            k.at(i, j) = e / g.torsion[i];
        }
    }
    return k;
}

}  // namespace

QuotientArrangement quotient_arrangement(const StackyArrangement& a, const MultiFan& fan,
                                         const BoxElement& box) {
    BoxCalc calc(a.n, a.b, fan);
    if (!calc.is_box(box.v, box.sigma)) fail(Errc::NotABox, "not a box element: " + box.str());

    const int m = a.m;
    const int r = int(a.n.torsion.size());
    const Cone sigma = box.sigma;
    const int s = sigma.size();

    if (s == 0) {
        // identity quotient: N(0) = N, beta(0) = beta, theta(0) = theta
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        return QuotientArrangement{box, a, all};
    }

    // N(sigma) = coker(beta_sigma)
    std::vector<GroupElement> b_sigma;
    for (int i : sigma.indices()) b_sigma.push_back(a.b[i]);
    CokernelResult cn = cokernel(beta_hom(a.n, b_sigma));
    const FgAbGroup& nq = cn.group;

    Cone link = fan.link(sigma);
    std::vector<int> link_idx = link.indices();
    const int l = int(link_idx.size());
    std::vector<GroupElement> b_quot;
    for (int i : link_idx) b_quot.push_back(apply(cn.proj, a.b[i]));

    // phi_1 : DG(beta) -> DG(beta~), beta~ the restriction to sigma + link,
    // induced by the coordinate selection on Z^{m+r}
    std::vector<int> su = sigma.unite(link).indices();
    std::vector<GroupElement> b_tilde;
    for (int i : su) b_tilde.push_back(a.b[i]);
    GaleDual gale_tilde = gale_dual(a.n, b_tilde);
    std::vector<int> sel = su;
    for (int k = 0; k < r; ++k) sel.push_back(m + k);
    IntMatrix p_sel = select_rows(IntMatrix::identity(m + r), sel);
    GroupHom phi1 = induced_on_cokernels(a.gale.coker, gale_tilde.coker, p_sel);
    GroupElement theta_tilde = apply(phi1, a.theta);

    // phi_2 : DG(beta(sigma)) -> DG(beta~) from the second Gale-dual diagram
    GaleDual gale_q = gale_dual(nq, b_quot);
    const int rq = int(nq.torsion.size());

    // iota : Z^l -> Z^{l+s}, link coordinates inside sigma + link
    IntMatrix iota(l + s, l);
    {
        int col = 0;
        for (int p = 0; p < int(su.size()); ++p)
            if (link.contains(su[p])) iota.at(p, col++) = 1;
        assert(col == l);
    }
    const IntMatrix& p_tilde = cn.proj.matrix;  // (d'+r') x (d+r)

    IntMatrix m1 = gale_q.lift * iota.transposed() - p_tilde * gale_tilde.lift;
    IntMatrix k1 = divide_by_relations(nq, m1);  // rq x (l+s)
    IntMatrix m2 = p_tilde * a.n.relation_columns();
    IntMatrix k2 = divide_by_relations(nq, m2);  // rq x r

    IntMatrix phi_amb(l + s + r, l + rq);
    for (int i = 0; i < l + s; ++i)
        for (int j = 0; j < l; ++j) phi_amb.at(i, j) = iota.at(i, j);
    for (int i = 0; i < l + s; ++i)
        for (int j = 0; j < rq; ++j) phi_amb.at(i, l + j) = -k1.at(j, i);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rq; ++j) phi_amb.at(l + s + i, l + j) = k2.at(j, i);

    // sanity: phi_amb carries the relation lattice of DG(beta(sigma)) into
    // the relation lattice of DG(beta~)
    {
        IntMatrix lhs = phi_amb * hcat(gale_q.lift, nq.relation_columns()).transposed();
        IntMatrix rhs = hcat(gale_tilde.lift, a.n.relation_columns()).transposed() * p_tilde.transposed();
        if (!(lhs == rhs)) fail(Errc::Internal, "Gale-dual diagram chase is inconsistent");
    }

    GroupHom phi2 = induced_on_cokernels(gale_q.coker, gale_tilde.coker, phi_amb);
    if (!(phi2.source == gale_q.dg) || !(gale_q.dg == gale_tilde.dg))
        fail(Errc::Internal, "DG(beta(sigma)) and DG(beta~) disagree");
    auto theta_q = hom_solve(phi2, theta_tilde);
    if (!theta_q) fail(Errc::Internal, "theta does not transport through phi_2");

    StackyArrangement arr = StackyArrangement::create(nq, b_quot, *theta_q, a.sign_convention);
    return QuotientArrangement{box, std::move(arr), link_idx};
}

std::vector<InertiaComponent> inertia_components(const StackyArrangement& a, const MultiFan& fan) {
    BoxCalc calc(a.n, a.b, fan);
    std::vector<InertiaComponent> out;
    for (const BoxElement& box : calc.enumerate_box())
        out.push_back({box, quotient_arrangement(a, fan, box), box.sigma.size()});
    return out;
}

FgAbGroup local_group(const StackyArrangement& a, const MultiFan& fan, const Cone& sigma_top) {
    if (!fan.is_cone(sigma_top) || sigma_top.size() != a.d)
        fail(Errc::NotTopDimensional, "not a top-dimensional cone: " + sigma_top.str());
    std::vector<GroupElement> b_sigma;
    for (int i : sigma_top.indices()) b_sigma.push_back(a.b[i]);
    return cokernel(beta_hom(a.n, b_sigma)).group;
}

std::vector<SectorTriple> three_twisted_sectors(const StackyArrangement& a, const MultiFan& fan,
                                                const std::vector<BoxElement>& boxes) {
    BoxCalc calc(a.n, a.b, fan);
    auto find_box = [&](const BoxElement& b) {
        auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
        if (it == boxes.end() || !(*it == b)) fail(Errc::Internal, "third box not enumerated");
        return int(it - boxes.begin());
    };

    std::vector<SectorTriple> out;
    for (size_t i1 = 0; i1 < boxes.size(); ++i1)
        for (size_t i2 = 0; i2 < boxes.size(); ++i2) {
            const BoxElement& x1 = boxes[i1];
            const BoxElement& x2 = boxes[i2];
            if (!fan.is_cone(x1.sigma.unite(x2.sigma))) continue;
            BoxElement x3 = calc.third_box(x1, x2);
            SectorTriple t;
            t.box_index = {int(i1), int(i2), find_box(x3)};
            t.sigma123 = x1.sigma.unite(x2.sigma).unite(x3.sigma);

            std::vector<Rat> sum(a.d, Rat(0));
            for (int k = 0; k < a.d; ++k)
                sum[k] = Rat(x1.v.free[k] + x2.v.free[k] + x3.v.free[k]);
            auto coeffs = fan.expand_in_cone(t.sigma123, sum);
            if (!coeffs) fail(Errc::Internal, "triple sum outside sigma123");
            std::vector<int> idx = t.sigma123.indices();
            for (size_t k = 0; k < idx.size(); ++k) {
                const Rat& c = (*coeffs)[k];
                if (denominator(c) != 1 || (numerator(c) != 1 && numerator(c) != 2))
                    fail(Errc::Internal, "triple coefficient not 1 or 2");
                t.a_coeffs.push_back(numerator(c));
                bool all3 = x1.sigma.contains(idx[k]) && x2.sigma.contains(idx[k]) &&
                            x3.sigma.contains(idx[k]);
                if (numerator(c) == 1 && all3) t.i_set.mask |= (1u << idx[k]);
                if (!x3.sigma.contains(idx[k])) t.j_set.mask |= (1u << idx[k]);
            }
            out.push_back(std::move(t));
        }
    return out;
}

std::pair<Cone, Cone> obstruction_euler_data(const SectorTriple& t, const std::vector<BoxElement>& boxes) {
    for (int k = 0; k < 3; ++k)
        if (boxes[t.box_index[k]].v.is_torsion()) return {Cone{}, Cone{}};
    Cone two_set;
    std::vector<int> idx = t.sigma123.indices();
    for (size_t k = 0; k < idx.size(); ++k)
        if (t.a_coeffs[k] == 2) two_set.mask |= (1u << idx[k]);
    return {two_set, t.i_set};
}

}  // namespace hyperchow
