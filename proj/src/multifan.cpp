#include "hyperchow/multifan.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hyperchow/errors.hpp"

namespace hyperchow {

Cone Cone::from_indices(const std::vector<int>& idx) {
    Cone c;
    for (int i : idx) c.mask |= (1u << i);
    return c;
}

std::vector<int> Cone::indices() const {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1) v.push_back(i);
    return v;
}

int Cone::size() const { return std::popcount(mask); }

bool Cone::operator<(const Cone& o) const {
    if (size() != o.size()) return size() < o.size();
    return indices() < o.indices();
}

std::string Cone::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : indices()) {
        os << (first ? "" : ",") << (i + 1);
        first = false;
    }
    os << "}";
    return os.str();
}

MultiFan::MultiFan(IntMatrix bar_matrix)
    : m_(bar_matrix.cols()), d_(bar_matrix.rows()), bar_(std::move(bar_matrix)) {
    if (m_ > 20) fail(Errc::DimensionTooLarge, "multi-fan enumeration beyond desk scale");
    table_.assign(size_t(1) << m_, 0);
    table_[0] = 1;
    cones_.push_back(Cone{0});
    for (uint32_t mask = 1; mask < (uint32_t(1) << m_); ++mask) {
        Cone c{mask};
        if (c.size() > d_) continue;
        // downward closure: all maximal proper subsets must be independent
        bool ok = true;
        for (int i : c.indices())
            if (!table_[mask & ~(1u << i)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        IntMatrix sel = select_cols(bar_, c.indices());
        if (rank_rational(sel) == c.size()) {
            table_[mask] = 1;
            cones_.push_back(c);
        }
    }
    std::sort(cones_.begin(), cones_.end());
}

bool MultiFan::is_cone(const Cone& s) const {
    if (s.mask >= table_.size()) return false;
    return table_[s.mask] != 0;
}

std::vector<Cone> MultiFan::top_cones() const {
    std::vector<Cone> tops;
    for (const Cone& c : cones_)
        if (c.size() == d_) tops.push_back(c);
    return tops;
}

Cone MultiFan::link(const Cone& s) const {
    if (!is_cone(s)) fail(Errc::NotACone, "link of a dependent set " + s.str());
    Cone l;
    for (int i = 0; i < m_; ++i) {
        if (s.contains(i)) continue;
        if (is_cone(Cone{s.mask | (1u << i)})) l.mask |= (1u << i);
    }
    return l;
}

std::optional<std::vector<Rat>> MultiFan::expand_in_cone(const Cone& sigma, const std::vector<Rat>& x) const {
    IntMatrix sel = select_cols(bar_, sigma.indices());
    return solve_rational_independent(sel, x);
}

Cone MultiFan::minimal_face_containing(const Cone& sigma, const std::vector<Rat>& x) const {
    if (!is_cone(sigma)) fail(Errc::NotACone, "not a cone: " + sigma.str());
    auto lambda = expand_in_cone(sigma, x);
    if (!lambda) fail(Errc::NotInCone, "point outside the span of " + sigma.str());
    Cone face;
    std::vector<int> idx = sigma.indices();
    for (size_t k = 0; k < idx.size(); ++k) {
        if ((*lambda)[k] < 0) fail(Errc::NotInCone, "negative coefficient in " + sigma.str());
        if ((*lambda)[k] > 0) face.mask |= (1u << idx[k]);
    }
    return face;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace hyperchow
