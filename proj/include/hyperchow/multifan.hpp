#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperchow/intmat.hpp"

namespace hyperchow {

// Cone of the simplicial multi-fan: a subset of {0..m-1} whose bar vectors
// are linearly independent. Stored as a bitmask.
struct Cone {
    uint32_t mask = 0;

    static Cone from_indices(const std::vector<int>& idx);
    std::vector<int> indices() const;
    int size() const;
    bool contains(int i) const { return (mask >> i) & 1; }
    bool subset_of(const Cone& o) const { return (mask & ~o.mask) == 0; }
    Cone unite(const Cone& o) const { return Cone{mask | o.mask}; }
    bool operator==(const Cone& o) const = default;
    bool operator<(const Cone& o) const;  // by (size, lexicographic indices)
    std::string str() const;              // 1-based, e.g. {1,3}
};

// Independence structure of {bar b_1, ..., bar b_m}: cones are the subsets
// with linearly independent bar vectors (repeated vectors are distinct
// elements). Full enumeration, cached by dimension.
class MultiFan {
  public:
    MultiFan() = default;
    MultiFan(IntMatrix bar_matrix);  // d x m

    int m() const { return m_; }
    int dim() const { return d_; }
    const IntMatrix& bar_matrix() const { return bar_; }

    bool is_cone(const Cone& s) const;
    const std::vector<Cone>& cones() const { return cones_; }
    std::vector<Cone> top_cones() const;
    Cone link(const Cone& s) const;  // NotACone if s is not a cone

    // Coefficients of x in the rays of sigma (columns), if x lies in the
    // rational span; nullopt otherwise.
    std::optional<std::vector<Rat>> expand_in_cone(const Cone& sigma, const std::vector<Rat>& x) const;

    // Support {i : lambda_i > 0} of the expansion; NotInCone on negative
    // coefficients or inconsistency.
    Cone minimal_face_containing(const Cone& sigma, const std::vector<Rat>& x) const;

  private:
    int m_ = 0, d_ = 0;
    IntMatrix bar_;
    std::vector<char> table_;  // 2^m independence flags
    std::vector<Cone> cones_;  // sorted by (size, lex)
};

std::vector<Rat> to_rat(const std::vector<Int>& v);

}  // namespace hyperchow
