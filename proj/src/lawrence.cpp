#include "hyperchow/lawrence.hpp"

#include <algorithm>
#include <sstream>

#include "hyperchow/errors.hpp"
#include "hyperchow/util.hpp"

namespace hyperchow {

LawrenceData lawrence_lift(const FgAbGroup& n, const std::vector<GroupElement>& b) {
    const int m = int(b.size());
    const int d = n.free_rank;
    LawrenceData out;
    // N_L = N + Z^m in canonical coordinates: free part first
    out.n_lawrence = FgAbGroup{d + m, n.torsion};
    auto lift_vec = [&](const GroupElement& e, int unit) {
        GroupElement le;
        le.free.assign(d + m, Int(0));
        for (int k = 0; k < d; ++k) le.free[k] = e.free[k];
        if (unit >= 0) le.free[d + unit] = 1;
        le.res = e.res;
        return le;
    };
    for (int i = 0; i < m; ++i) out.vectors.push_back(lift_vec(b[i], i));
    GroupElement zero = zero_element(n);
    for (int i = 0; i < m; ++i) out.vectors.push_back(lift_vec(zero, i));
    return out;
}

LawrenceData lawrence_fan(const StackyArrangement& a) {
    a.require_ring_ok();
    LawrenceData out = lawrence_lift(a.n, a.b);
    const int m = a.m;
    const int q = a.gale.dg.free_rank;  // m - d
    IntMatrix abar = a.gale.bar_dual_matrix();
    std::vector<Rat> tbar = to_rat(a.theta.free);

    subsets_of_size(m, q, [&](const std::vector<int>& c) {
        IntMatrix sel = select_cols(abar, c);
        if (rank_rational(sel) != q) return;
        auto lambda = solve_rational_independent(sel, tbar);
        if (!lambda) fail(Errc::Internal, "cobasis solve failed");
        LawrenceCone cone;
        cone.cobasis = c;
        cone.lambda = *lambda;
        for (int j = 0; j < q; ++j) {
            if ((*lambda)[j] == 0)
                fail(Errc::NonGeneric, "theta lies on the hyperplane of cobasis");
            cone.monomial.push_back((*lambda)[j] > 0 ? c[j] : m + c[j]);
        }
        std::sort(cone.monomial.begin(), cone.monomial.end());
        std::vector<char> removed(2 * m, 0);
        for (int r : cone.monomial) removed[r] = 1;
        for (int r = 0; r < 2 * m; ++r)
            if (!removed[r]) cone.maximal_cone.push_back(r);
        out.fan.push_back(std::move(cone));
    });
    out.ideal = hypertoric_ideal(a);
    return out;
}

std::vector<std::vector<Int>> hypertoric_ideal(const StackyArrangement& a) {
    IntMatrix abar = a.gale.bar_dual_matrix();
    std::vector<std::vector<Int>> rows;
    for (int k = 0; k < abar.rows(); ++k) rows.push_back(abar.row(k));
    return rows;
}

Cone project_cone(const MultiFan& fan, int m, const std::vector<int>& lawrence_rays) {
    std::vector<char> present(2 * m, 0);
    for (int r : lawrence_rays) {
        if (r < 0 || r >= 2 * m) fail(Errc::NotPaired, "ray id out of range");
        present[r] = 1;
    }
    Cone c;
    for (int i = 0; i < m; ++i)
        if (present[i] && present[m + i]) c.mask |= (1u << i);
    if (!fan.is_cone(c)) fail(Errc::NotACone, "paired indices are dependent");
    return c;
}

std::string quadric_to_string(const std::vector<Int>& row) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        Int c = row[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        if (mag != 1) os << mag << "*";
        os << "z" << (i + 1) << "*w" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string monomial_to_string(const std::vector<int>& rays, int m) {
    std::ostringstream os;
    bool first = true;
    for (int r : rays) {
        if (!first) os << "*";
        if (r < m)
            os << "z" << (r + 1);
        else
            os << "w" << (r - m + 1);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace hyperchow
