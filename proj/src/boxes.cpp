#include "hyperchow/boxes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hyperchow/errors.hpp"

namespace hyperchow {

std::string BoxElement::str() const {
    std::ostringstream os;
    os << "(" << v.str() << ", " << sigma.str() << ")";
    return os.str();
}

namespace {

// Every residue tuple of the torsion part, in lexicographic order.
std::vector<std::vector<Int>> residue_tuples(const FgAbGroup& g) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(g.torsion.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        int j = int(g.torsion.size()) - 1;
        while (j >= 0) {
            cur[j] += 1;
            if (cur[j] < g.torsion[j]) break;
            cur[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

}  // namespace

std::vector<BoxElement> BoxCalc::enumerate_box() const {
    const int d = n_->free_rank;
    std::vector<BoxElement> out;
    auto tuples = residue_tuples(*n_);

    for (const Cone& sigma : fan_->cones()) {
        std::vector<std::vector<Rat>> interior;  // alpha vectors found
        std::vector<std::vector<Int>> points;
        if (sigma.size() == 0) {
            points.push_back(std::vector<Int>(d, Int(0)));
            interior.push_back({});
        } else {
            std::vector<int> idx = sigma.indices();
            // bounding box of the open parallelepiped
            std::vector<Int> lo(d, Int(0)), hi(d, Int(0));
            for (int k = 0; k < d; ++k)
                for (int i : idx) {
                    const Int& e = fan_->bar_matrix().at(k, i);
                    if (e < 0) lo[k] += e;
                    if (e > 0) hi[k] += e;
                }
            // scan integer points
            std::vector<Int> pt(d);
            std::function<void(int)> scan = [&](int k) {
                if (k == d) {
                    auto alpha = fan_->expand_in_cone(sigma, to_rat(pt));
                    if (!alpha) return;
                    for (const Rat& a : *alpha)
                        if (!(a > 0 && a < 1)) return;
                    points.push_back(pt);
                    interior.push_back(*alpha);
                    return;
                }
                for (Int x = lo[k]; x <= hi[k]; ++x) {
                    pt[k] = x;
                    scan(k + 1);
                }
            };
            scan(0);
        }
        for (size_t p = 0; p < points.size(); ++p) {
            for (const auto& res : tuples) {
                BoxElement box;
                box.sigma = sigma;
                box.alphas = interior[p];
                box.v.free = points[p];
                box.v.res = res;
                out.push_back(std::move(box));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FanElement BoxCalc::fractional_part(const GroupElement& c, const Cone& sigma) const {
    if (!fan_->is_cone(sigma)) fail(Errc::NotRepresentable, "not a cone: " + sigma.str());
    auto coeffs = fan_->expand_in_cone(sigma, to_rat(bar(c)));
    if (!coeffs) fail(Errc::NotRepresentable, "bar(c) outside the span of " + sigma.str());
    std::vector<int> idx = sigma.indices();
    FanElement fe;
    fe.c = c;
    fe.sigma = sigma;
    fe.exponents.assign(fan_->m(), Int(0));
    GroupElement v = c;
    Cone tau;
    std::vector<Rat> alphas;
    for (size_t k = 0; k < idx.size(); ++k) {
        const Rat& a = (*coeffs)[k];
        if (a < 0) fail(Errc::NotRepresentable, "negative coefficient over " + sigma.str());
        Int mi = rat_floor(a);
        Rat frac = a - Rat(mi);
        fe.exponents[idx[k]] = mi;
        if (mi != 0) v = sub(*n_, v, scale(*n_, mi, (*b_)[idx[k]]));
        if (frac > 0) {
            tau.mask |= (1u << idx[k]);
            alphas.push_back(frac);
        }
    }
    fe.box = BoxElement{std::move(v), tau, std::move(alphas)};
    return fe;
}

GroupElement BoxCalc::ceiling(const GroupElement& c, const Cone& sigma) const {
    FanElement fe = fractional_part(c, sigma);
    GroupElement out = sum_b(fe.box.sigma);
    for (int i : sigma.indices())
        if (fe.exponents[i] != 0) out = add(*n_, out, scale(*n_, fe.exponents[i], (*b_)[i]));
    return out;
}

std::pair<GroupElement, Cone> BoxCalc::epsilon(const GroupElement& c1, const Cone& s1,
                                               const GroupElement& c2, const Cone& s2) const {
    Cone u = s1.unite(s2);
    if (!fan_->is_cone(u)) fail(Errc::NotACone, "union is dependent: " + u.str());
    GroupElement e = ceiling(c1, s1);
    e = add(*n_, e, ceiling(c2, s2));
    e = sub(*n_, e, ceiling(add(*n_, c1, c2), u));
    Cone se = fan_->minimal_face_containing(u, to_rat(bar(e)));
    return {std::move(e), se};
}

GroupElement BoxCalc::sum_b(const Cone& sigma) const {
    GroupElement s = zero_element(*n_);
    for (int i : sigma.indices()) s = add(*n_, s, (*b_)[i]);
    return s;
}

BoxElement BoxCalc::box_inverse(const BoxElement& box) const {
    BoxElement inv;
    inv.sigma = box.sigma;
    inv.v = sub(*n_, sum_b(box.sigma), box.v);
    inv.alphas.reserve(box.alphas.size());
    for (const Rat& a : box.alphas) inv.alphas.push_back(Rat(1) - a);
    return inv;
}

BoxElement BoxCalc::third_box(const BoxElement& b1, const BoxElement& b2) const {
    Cone u = b1.sigma.unite(b2.sigma);
    if (!fan_->is_cone(u)) fail(Errc::NotACone, "union is dependent: " + u.str());
    GroupElement s = add(*n_, b1.v, b2.v);
    GroupElement v3 = sub(*n_, ceiling(s, u), s);
    FanElement fe = fractional_part(v3, u);
    return fe.box;
}

Int BoxCalc::degree(const GroupElement& c, const Cone& sigma) const {
    FanElement fe = fractional_part(c, sigma);
    Int deg = fe.box.sigma.size();
    for (const Int& mi : fe.exponents) deg += mi;
    return deg;
}

bool BoxCalc::is_box(const GroupElement& v, const Cone& sigma) const {
    if (!fan_->is_cone(sigma)) return false;
    auto coeffs = fan_->expand_in_cone(sigma, to_rat(bar(v)));
    if (!coeffs) return false;
    for (const Rat& a : *coeffs)
        if (!(a > 0 && a < 1)) return false;
    // bar(v) must not involve rays outside sigma: the expansion already
    // certifies membership of the span; strictness certifies minimality
    return true;
}

}  // namespace hyperchow
