#pragma once

#include "fibdyn/escape.hpp"
#include "fibdyn/raster.hpp"
#include "fibdyn/system.hpp"

namespace fibdyn {

// Parameter-plane classification of the orbit of 0. Parameters with modulus at
// or below the inner bound are inside for certain; at or above the outer bound
// the orbit of 0 escapes for certain. The annulus in between is decided by
// iteration with thresholds valid uniformly over it.
inline constexpr double kLocusInnerBound = 0.25 - 1e-3;
inline constexpr double kLocusOuterBound = 2.0 + 1e-3;

struct LocusVerdict {
    enum class Kind { InsideByBound, OutsideByBound, EscapedAt, BoundedAtBudget };
    Kind kind = Kind::BoundedAtBudget;
    int n = 0;

    bool bounded() const {
        return kind == Kind::InsideByBound || kind == Kind::BoundedAtBudget;
    }
};

// Requires f with zero constant and linear coefficients (the orbit of 0 then
// starts 0, 0, c, c, c^2+c, ...); throws HypothesisViolated otherwise.
class LocusClassifier {
public:
    explicit LocusClassifier(Polynomial f);

    // budget >= 4 required.
    LocusVerdict classify(Complex c, int budget) const;

    double uniform_m() const { return uniformM_; }
    double uniform_r() const { return uniformR_; }

private:
    Polynomial f_;
    double uniformM_ = 0.0;
    double uniformR_ = 0.0;
};

// Renders the parameter plane: certain-inside and bounded-at-budget parameters
// map to Inside/Undecided pixels, escaping parameters to Escaped with the
// detection step as the iteration count.
RasterGrid locus_grid(const Region& region, int W, int H, const Polynomial& f,
                      int budget, int tileSize = 64, int workers = 0);

} // namespace fibdyn
