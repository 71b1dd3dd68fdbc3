#include "hyperchow/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hyperchow/errors.hpp"

namespace hyperchow {

Int FgAbGroup::order() const {
    if (!is_finite()) fail(Errc::Internal, "order of infinite group");
    Int n = 1;
    for (const Int& t : torsion) n *= t;
    return n;
}

std::string FgAbGroup::str() const {
    std::ostringstream os;
    if (free_rank > 0) os << "Z^" << free_rank;
    for (const Int& t : torsion) os << (os.tellp() > 0 ? " + " : "") << "Z/" << t;
    if (os.tellp() == 0) os << "0";
    return os.str();
}

IntMatrix FgAbGroup::relation_columns() const {
    IntMatrix q(coords(), int(torsion.size()));
    for (size_t j = 0; j < torsion.size(); ++j) q.at(free_rank + int(j), int(j)) = torsion[j];
    return q;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (free != o.free) return free < o.free;
    return res < o.res;
}

bool GroupElement::is_zero() const {
    auto z = [](const Int& x) { return x == 0; };
    return std::all_of(free.begin(), free.end(), z) && std::all_of(res.begin(), res.end(), z);
}

bool GroupElement::is_torsion() const {
    return std::all_of(free.begin(), free.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> GroupElement::coords() const {
    std::vector<Int> c = free;
    c.insert(c.end(), res.begin(), res.end());
    return c;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
    if (!res.empty()) {
        os << (free.empty() ? "" : ";");
        for (size_t i = 0; i < res.size(); ++i) os << (i ? "," : "") << res[i];
    }
    os << ")";
    return os.str();
}

GroupElement make_element(const FgAbGroup& g, const std::vector<Int>& coords) {
    if (int(coords.size()) != g.coords()) fail(Errc::ValueError, "coordinate length mismatch");
    GroupElement e;
    e.free.assign(coords.begin(), coords.begin() + g.free_rank);
    e.res.resize(g.torsion.size());
    for (size_t j = 0; j < g.torsion.size(); ++j)
        e.res[j] = mod_floor(coords[g.free_rank + j], g.torsion[j]);
    return e;
}

GroupElement zero_element(const FgAbGroup& g) {
    GroupElement e;
    e.free.assign(g.free_rank, Int(0));
    e.res.assign(g.torsion.size(), Int(0));
    return e;
}

GroupElement add(const FgAbGroup& g, const GroupElement& x, const GroupElement& y) {
    GroupElement e = x;
    for (int i = 0; i < g.free_rank; ++i) e.free[i] += y.free[i];
    for (size_t j = 0; j < g.torsion.size(); ++j) e.res[j] = mod_floor(e.res[j] + y.res[j], g.torsion[j]);
    return e;
}

GroupElement sub(const FgAbGroup& g, const GroupElement& x, const GroupElement& y) {
    return add(g, x, neg(g, y));
}

GroupElement neg(const FgAbGroup& g, const GroupElement& x) {
    GroupElement e = x;
    for (int i = 0; i < g.free_rank; ++i) e.free[i] = -e.free[i];
    for (size_t j = 0; j < g.torsion.size(); ++j) e.res[j] = mod_floor(-e.res[j], g.torsion[j]);
    return e;
}

GroupElement scale(const FgAbGroup& g, const Int& c, const GroupElement& x) {
    GroupElement e = x;
    for (int i = 0; i < g.free_rank; ++i) e.free[i] *= c;
    for (size_t j = 0; j < g.torsion.size(); ++j) e.res[j] = mod_floor(c * e.res[j], g.torsion[j]);
    return e;
}

GroupHom make_hom(const FgAbGroup& source, const FgAbGroup& target, IntMatrix matrix) {
    if (matrix.rows() != target.coords() || matrix.cols() != source.coords())
        fail(Errc::ValueError, "hom matrix shape mismatch");
    GroupHom f{source, target, std::move(matrix)};
    // n * image of a torsion generator of order n must vanish in the target
    for (size_t j = 0; j < source.torsion.size(); ++j) {
        int col = source.free_rank + int(j);
        GroupElement img = make_element(target, f.matrix.col(col));
        if (!scale(target, source.torsion[j], img).is_zero())
            fail(Errc::ValueError, "hom not well-defined on torsion generator");
    }
    return f;
}

GroupElement apply(const GroupHom& f, const GroupElement& x) {
    return apply(f, x.coords());
}

GroupElement apply(const GroupHom& f, const std::vector<Int>& coords) {
    return make_element(f.target, mat_vec(f.matrix, coords));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    assert(f.target == g.source);
    return make_hom(f.source, g.target, g.matrix * f.matrix);
}

GroupHom identity_hom(const FgAbGroup& g) {
    return GroupHom{g, g, IntMatrix::identity(g.coords())};
}

std::optional<GroupElement> hom_solve(const GroupHom& f, const GroupElement& y) {
    // f.matrix x = y mod relation lattice of the target
    IntMatrix aug = hcat(f.matrix, f.target.relation_columns());
    auto sol = solve_integer(aug, y.coords());
    if (!sol) return std::nullopt;
    std::vector<Int> x(sol->begin(), sol->begin() + f.source.coords());
    return make_element(f.source, x);
}

CokernelResult cokernel(const GroupHom& f) {
    const FgAbGroup& t = f.target;
    const int n = t.coords();

    IntMatrix rel = hcat(f.matrix, t.relation_columns());
    if (rel.cols() == 0) {
        // quotient by the zero subgroup: the target itself, identically
        return CokernelResult{t, identity_hom(t), IntMatrix::identity(n)};
    }
    SmithResult s = smith_normal_form(rel);
    const int nd = std::min(rel.rows(), rel.cols());
    int rank = 0;
    for (int i = 0; i < nd; ++i)
        if (s.d.at(i, i) != 0) ++rank;

    // coordinates y = U x; row i contributes Z/d_i (dropped when d_i = 1),
    // rows beyond the rank contribute Z
    std::vector<int> free_rows, tors_rows;
    std::vector<Int> tors;
    for (int i = 0; i < rank; ++i)
        if (s.d.at(i, i) >= 2) {
            tors_rows.push_back(i);
            tors.push_back(s.d.at(i, i));
        }
    for (int i = rank; i < n; ++i) free_rows.push_back(i);

    FgAbGroup q{int(free_rows.size()), tors};
    std::vector<int> selected = free_rows;
    selected.insert(selected.end(), tors_rows.begin(), tors_rows.end());

    IntMatrix proj_matrix = select_rows(s.u, selected);
    GroupHom proj = make_hom(t, q, proj_matrix);

    IntMatrix uinv = unimodular_inverse(s.u);
    IntMatrix section = select_cols(uinv, selected);

    return CokernelResult{q, proj, section};
}

GroupElement section_of(const CokernelResult& c, const GroupElement& x) {
    // representative in the ambient group's coordinates
    std::vector<Int> rep = mat_vec(c.section, x.coords());
    return make_element(c.proj.source, rep);
}

GroupHom induced_on_cokernels(const CokernelResult& c1, const CokernelResult& c2, const IntMatrix& p) {
    const int k = c1.group.coords();
    IntMatrix m(c2.group.coords(), k);
    for (int j = 0; j < k; ++j) {
        std::vector<Int> gen(k, Int(0));
        gen[j] = 1;
        std::vector<Int> rep = mat_vec(c1.section, gen);
        std::vector<Int> mapped = mat_vec(p, rep);
        GroupElement img = apply(c2.proj, make_element(c2.proj.source, mapped));
        m.set_col(j, img.coords());
    }
    return make_hom(c1.group, c2.group, std::move(m));
}

}  // namespace hyperchow
