#pragma once

#include <optional>

#include "hyperchow/gale.hpp"
#include "hyperchow/multifan.hpp"

namespace hyperchow {

struct ValidationReport {
    bool nontorsion = false;
    bool finite_cokernel = false;
    bool theta_in_image = false;
    bool generic = false;
    bool positively_spanning = false;

    bool all_passed() const {
        return nontorsion && finite_cokernel && theta_in_image && generic && positively_spanning;
    }
    // What the combinatorial/ring pipeline needs. theta-in-image is only
    // required where a lift psi is consumed (hyperplanes, bounded regions);
    // quotient arrangements can carry a theta outside im(beta_dual) in its
    // torsion part and still define the ring data.
    bool ring_ok() const { return nontorsion && finite_cokernel && generic && positively_spanning; }
    std::vector<std::pair<std::string, bool>> checks() const;
};

struct Hyperplane {
    int index;  // 0-based ray index
    std::vector<Int> normal;
    Int offset;
};

struct BoundedRegion {
    std::vector<std::vector<Rat>> vertices;  // sorted lexicographically
    std::vector<int> signs;                  // +1 / -1 per hyperplane
};

struct GammaInfo {
    enum class Status { Empty, LowerDimensional, Unbounded, Bounded };
    Status status = Status::Empty;
    std::vector<std::vector<Rat>> vertices;
    std::vector<int> bounding;  // facet-defining hyperplanes (0-based), bounded case only
    std::vector<int> extra;
};

struct BoundedRegionsResult {
    std::vector<BoundedRegion> cells;
    GammaInfo gamma;
};

// Raw input data for a stacky hyperplane arrangement; theta given either by
// canonical DG coordinates or by an integral lift with a sign flag
// (sign * beta_dual(lift) = theta; the paper's normative convention is -1).
struct ArrangementInput {
    FgAbGroup n;
    std::vector<GroupElement> b;
    std::optional<std::vector<Int>> theta_value;  // coordinates in DG(beta)
    std::optional<std::vector<Int>> theta_lift;
    int sign = -1;
};

class StackyArrangement {
  public:
    FgAbGroup n;
    std::vector<GroupElement> b;
    GroupHom beta;
    GaleDual gale;
    GroupElement theta;
    int sign_convention = -1;
    ValidationReport report;
    int m = 0, d = 0;
    IntMatrix bar_matrix;  // d x m

    static StackyArrangement create(const FgAbGroup& n, std::vector<GroupElement> b,
                                    GroupElement theta, int sign = -1);
    static StackyArrangement from_lift(const FgAbGroup& n, std::vector<GroupElement> b,
                                       const std::vector<Int>& lift, int sign = -1);

    // Canonical lift psi with sign * beta_dual(psi) = theta. NotInImage if none.
    std::vector<Int> lift_of_theta(int sign) const;

    std::vector<Hyperplane> hyperplanes(int sign) const;
    std::vector<Hyperplane> hyperplanes() const;  // stored sign convention

    BoundedRegionsResult bounded_regions() const;  // DimensionTooLarge for d > 3

    StackyArrangement flip_coorientation(int i) const;

    void require_ring_ok() const;  // InvalidArrangement otherwise
};

// Builds the arrangement; throws TorsionGenerator / InfiniteCokernel /
// NotInImage (lift inputs) on structurally broken data. Soft failures
// (genericity, spanning, theta outside the image) land in the report.
StackyArrangement make_arrangement(const ArrangementInput& in);

// Report-style validation that never throws.
ValidationReport validate_input(const ArrangementInput& in);

// Do the columns positively span R^d (equivalently, is the dual cone {0})?
bool positively_spans(const IntMatrix& columns);

// Genericity: every cobasis expansion of bar(theta) has all coefficients
// nonzero.
bool is_generic(const GaleDual& gale, const GroupElement& theta);

}  // namespace hyperchow
