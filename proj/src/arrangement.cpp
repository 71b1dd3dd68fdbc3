#include "hyperchow/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "hyperchow/errors.hpp"
#include "hyperchow/util.hpp"

namespace hyperchow {

std::vector<std::pair<std::string, bool>> ValidationReport::checks() const {
    return {
        {"nontorsion", nontorsion},
        {"finite-cokernel", finite_cokernel},
        {"theta-in-image", theta_in_image},
        {"genericity", generic},
        {"positive-spanning", positively_spanning},
    };
}

bool positively_spans(const IntMatrix& columns) {
    const int d = columns.rows();
    const int m = columns.cols();
    if (d == 0) return true;
    if (rank_rational(columns) != d) return false;  // dual cone contains a line
    // The dual cone {x : <u_i,x> >= 0} is pointed; it is nonzero iff it has an
    // extreme ray, whose active constraints have rank exactly d-1.
    bool nontrivial = false;
    subsets_of_size(m, d - 1, [&](const std::vector<int>& s) {
        if (nontrivial) return;
        IntMatrix rows(int(s.size()), d);
        for (size_t r = 0; r < s.size(); ++r)
            for (int j = 0; j < d; ++j) rows.at(int(r), j) = columns.at(j, s[r]);
        if (rank_rational(rows) != d - 1) return;
        IntMatrix ker = integer_kernel(rows);
        if (ker.cols() != 1) return;
        std::vector<Int> z = ker.col(0);
        for (int dir = 0; dir < 2; ++dir) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                Int dot = 0;
                for (int j = 0; j < d; ++j) dot += columns.at(j, i) * z[j];
                if (dot < 0) ok = false;
            }
            if (ok) {
                nontrivial = true;
                return;
            }
            for (Int& x : z) x = -x;
        }
    });
    return !nontrivial;
}

bool is_generic(const GaleDual& gale, const GroupElement& theta) {
    const int q = gale.dg.free_rank;
    const int m = gale.beta_dual.source.free_rank;
    if (q == 0) return true;  // bar(DG) = 0, no hyperplane configuration
    IntMatrix abar = gale.bar_dual_matrix();  // q x m
    std::vector<Rat> tbar = to_rat(theta.free);
    bool generic = true;
    subsets_of_size(m, q, [&](const std::vector<int>& c) {
        if (!generic) return;
        IntMatrix sel = select_cols(abar, c);
        if (rank_rational(sel) != q) return;  // not a cobasis
        auto lambda = solve_rational_independent(sel, tbar);
        if (!lambda) fail(Errc::Internal, "cobasis solve failed");
        for (const Rat& l : *lambda)
            if (l == 0) {
                generic = false;
                return;
            }
    });
    return generic;
}

StackyArrangement StackyArrangement::create(const FgAbGroup& n, std::vector<GroupElement> b,
                                            GroupElement theta, int sign) {
    StackyArrangement a;
    a.n = n;
    a.b = std::move(b);
    a.m = int(a.b.size());
    a.d = n.free_rank;
    a.sign_convention = sign;

    a.bar_matrix = IntMatrix(a.d, a.m);
    for (int i = 0; i < a.m; ++i)
        for (int k = 0; k < a.d; ++k) a.bar_matrix.at(k, i) = a.b[i].free[k];

    a.gale = gale_dual(n, a.b);  // throws TorsionGenerator / InfiniteCokernel
    a.beta = beta_hom(n, a.b);
    a.theta = std::move(theta);

    a.report.nontorsion = true;
    a.report.finite_cokernel = true;
    a.report.positively_spanning = positively_spans(a.bar_matrix);
    a.report.generic = is_generic(a.gale, a.theta);
    a.report.theta_in_image = hom_solve(a.gale.beta_dual, a.theta).has_value();
    return a;
}

StackyArrangement StackyArrangement::from_lift(const FgAbGroup& n, std::vector<GroupElement> b,
                                               const std::vector<Int>& lift, int sign) {
    GaleDual g = gale_dual(n, b);
    if (int(lift.size()) != int(b.size())) fail(Errc::ValueError, "lift length mismatch");
    GroupElement image = apply(g.beta_dual, lift);
    GroupElement theta = (sign == 1) ? image : neg(g.dg, image);
    return create(n, std::move(b), std::move(theta), sign);
}

std::vector<Int> StackyArrangement::lift_of_theta(int sign) const {
    return solve_lift(gale.beta_dual, theta, sign);
}

std::vector<Hyperplane> StackyArrangement::hyperplanes() const {
    return hyperplanes(sign_convention);
}

std::vector<Hyperplane> StackyArrangement::hyperplanes(int sign) const {
    require_ring_ok();
    std::vector<Int> psi = lift_of_theta(sign);
    std::vector<Hyperplane> hs;
    for (int i = 0; i < m; ++i) {
        Hyperplane h;
        h.index = i;
        h.normal = bar(b[i]);
        h.offset = psi[i];
        hs.push_back(std::move(h));
    }
    return hs;
}

void StackyArrangement::require_ring_ok() const {
    if (!report.ring_ok()) fail(Errc::InvalidArrangement, "arrangement fails validation");
}

namespace {

struct LinIneq {
    std::vector<Rat> a;
    Rat c;
    bool strict;
};

// Fourier-Motzkin feasibility of { a.x + c (>|>=) 0 }.
bool fm_feasible(std::vector<LinIneq> sys, int d) {
    for (int k = 0; k < d; ++k) {
        std::vector<LinIneq> pos, negs, rest;
        for (auto& q : sys) {
            if (q.a[k] > 0)
                pos.push_back(std::move(q));
            else if (q.a[k] < 0)
                negs.push_back(std::move(q));
            else
                rest.push_back(std::move(q));
        }
        for (const auto& p : pos)
            for (const auto& nq : negs) {
                LinIneq comb;
                comb.a.resize(d);
                Rat fp = -nq.a[k];  // > 0
                Rat fq = p.a[k];    // > 0
                for (int j = 0; j < d; ++j) comb.a[j] = p.a[j] * fp + nq.a[j] * fq;
                comb.c = p.c * fp + nq.c * fq;
                comb.strict = p.strict || nq.strict;
                rest.push_back(std::move(comb));
            }
        sys = std::move(rest);
    }
    for (const auto& q : sys) {
        if (q.strict ? !(q.c > 0) : !(q.c >= 0)) return false;
    }
    return true;
}

std::vector<LinIneq> cell_system(const IntMatrix& bar, const std::vector<Int>& psi,
                                 const std::vector<int>& signs, bool strict) {
    const int d = bar.rows();
    const int m = bar.cols();
    std::vector<LinIneq> sys;
    for (int i = 0; i < m; ++i) {
        LinIneq q;
        q.a.resize(d);
        for (int j = 0; j < d; ++j) q.a[j] = Rat(signs[i] * bar.at(j, i));
        q.c = Rat(signs[i] * psi[i]);
        q.strict = strict;
        sys.push_back(std::move(q));
    }
    return sys;
}

}  // namespace

BoundedRegionsResult StackyArrangement::bounded_regions() const {
    require_ring_ok();
    if (d > 3) fail(Errc::DimensionTooLarge, "bounded-region enumeration limited to d <= 3");
    std::vector<Int> psi = lift_of_theta(sign_convention);

    // all arrangement vertices: intersections of d independent hyperplanes
    std::vector<std::vector<Rat>> verts;
    subsets_of_size(m, d, [&](const std::vector<int>& t) {
        IntMatrix a(d, d);
        std::vector<Rat> rhs(d);
        for (int r = 0; r < d; ++r) {
            for (int j = 0; j < d; ++j) a.at(r, j) = bar_matrix.at(j, t[r]);
            rhs[r] = Rat(-psi[t[r]]);
        }
        if (rank_rational(a) != d) return;
        auto p = solve_rational_independent(a, rhs);
        if (p) verts.push_back(*p);
    });
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    auto cell_of = [&](const std::vector<int>& signs) -> std::optional<BoundedRegion> {
        if (!fm_feasible(cell_system(bar_matrix, psi, signs, true), d)) return std::nullopt;
        BoundedRegion reg;
        reg.signs = signs;
        for (const auto& v : verts) {
            bool inside = true;
            for (int i = 0; i < m && inside; ++i) {
                Rat val = Rat(psi[i]);
                for (int j = 0; j < d; ++j) val += Rat(bar_matrix.at(j, i)) * v[j];
                if (signs[i] > 0 ? val < 0 : val > 0) inside = false;
            }
            if (inside) reg.vertices.push_back(v);
        }
        return reg;
    };

    auto is_bounded = [&](const std::vector<int>& signs) {
        IntMatrix cols(d, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < d; ++j) cols.at(j, i) = signs[i] * bar_matrix.at(j, i);
        return positively_spans(cols);
    };

    BoundedRegionsResult out;
    std::vector<int> signs(m, 1);
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        for (int i = 0; i < m; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
        bool all_plus = (mask == 0);
        bool bounded = is_bounded(signs);
        if (!bounded && !all_plus) continue;
        auto reg = cell_of(signs);
        if (all_plus) {
            GammaInfo& g = out.gamma;
            if (!reg) {
                // distinguish empty from lower-dimensional
                bool closed_ok = fm_feasible(cell_system(bar_matrix, psi, signs, false), d);
                g.status = closed_ok ? GammaInfo::Status::LowerDimensional : GammaInfo::Status::Empty;
            } else if (!bounded) {
                g.status = GammaInfo::Status::Unbounded;
                g.vertices = reg->vertices;
            } else {
                g.status = GammaInfo::Status::Bounded;
                g.vertices = reg->vertices;
                // facet-defining hyperplanes: vertices on H_i affinely span dim d-1
                for (int i = 0; i < m; ++i) {
                    std::vector<std::vector<Rat>> on;
                    for (const auto& v : g.vertices) {
                        Rat val = Rat(psi[i]);
                        for (int j = 0; j < d; ++j) val += Rat(bar_matrix.at(j, i)) * v[j];
                        if (val == 0) on.push_back(v);
                    }
                    bool facet = false;
                    if (!on.empty()) {
                        std::vector<std::vector<Rat>> rows;
                        for (size_t k = 1; k < on.size(); ++k) {
                            std::vector<Rat> diff(d);
                            for (int j = 0; j < d; ++j) diff[j] = on[k][j] - on[0][j];
                            rows.push_back(diff);
                        }
                        // affine rank over Q
                        int rank = 0;
                        {
                            std::vector<std::vector<Rat>> w = rows;
                            int rr = 0;
                            for (int c = 0; c < d && rr < int(w.size()); ++c) {
                                int piv = -1;
                                for (int x = rr; x < int(w.size()); ++x)
                                    if (w[x][c] != 0) {
                                        piv = x;
                                        break;
                                    }
                                if (piv < 0) continue;
                                std::swap(w[rr], w[piv]);
                                for (int x = 0; x < int(w.size()); ++x) {
                                    if (x == rr || w[x][c] == 0) continue;
                                    Rat f = w[x][c] / w[rr][c];
                                    for (int y = c; y < d; ++y) w[x][y] -= f * w[rr][y];
                                }
                                ++rr;
                            }
                            rank = rr;
                        }
                        facet = (rank == d - 1);
                    }
                    if (facet)
                        g.bounding.push_back(i);
                    else
                        g.extra.push_back(i);
                }
            }
            if (!bounded) continue;
        }
        if (reg && bounded) out.cells.push_back(std::move(*reg));
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const BoundedRegion& x, const BoundedRegion& y) { return x.vertices < y.vertices; });
    return out;
}

StackyArrangement StackyArrangement::flip_coorientation(int i) const {
    if (i < 0 || i >= m) fail(Errc::ValueError, "flip index out of range");
    std::vector<GroupElement> b2 = b;
    b2[i] = neg(n, b2[i]);
    GaleDual g2 = gale_dual(n, b2);
    // transport theta along the ambient sign flip S_i + id on Z^{m+r}
    const int r = int(n.torsion.size());
    IntMatrix p = IntMatrix::identity(m + r);
    p.at(i, i) = -1;
    GroupHom phi = induced_on_cokernels(gale.coker, g2.coker, p);
    GroupElement theta2 = apply(phi, theta);
    return create(n, std::move(b2), std::move(theta2), sign_convention);
}

StackyArrangement make_arrangement(const ArrangementInput& in) {
    if (in.theta_value && in.theta_lift) fail(Errc::SchemaError, "both theta value and lift given");
    if (!in.theta_value && !in.theta_lift) fail(Errc::SchemaError, "theta missing");
    if (in.theta_lift) return StackyArrangement::from_lift(in.n, in.b, *in.theta_lift, in.sign);
    GaleDual g = gale_dual(in.n, in.b);
    GroupElement theta = make_element(g.dg, *in.theta_value);
    return StackyArrangement::create(in.n, in.b, std::move(theta), in.sign);
}

ValidationReport validate_input(const ArrangementInput& in) {
    ValidationReport rep;
    rep.nontorsion = std::all_of(in.b.begin(), in.b.end(),
                                 [](const GroupElement& e) { return !e.is_torsion(); });
    const int d = in.n.free_rank;
    IntMatrix bar(d, int(in.b.size()));
    for (size_t i = 0; i < in.b.size(); ++i)
        for (int k = 0; k < d; ++k) bar.at(k, int(i)) = in.b[i].free[k];
    rep.finite_cokernel = rep.nontorsion && (rank_rational(bar) == d);
    rep.positively_spanning = positively_spans(bar);
    if (!(rep.nontorsion && rep.finite_cokernel)) return rep;
    try {
        StackyArrangement a = make_arrangement(in);
        return a.report;
    } catch (const DomainError&) {
        return rep;
    }
}

}  // namespace hyperchow
