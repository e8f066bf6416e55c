#include "fibdyn/locus.hpp"

#include <cmath>

#include "fibdyn/errors.hpp"

namespace fibdyn {

LocusClassifier::LocusClassifier(Polynomial f) : f_(std::move(f)) {
    const auto& a = f_.coefficients();
    bool zeroConst = a.empty() || a[0] == Complex(0.0, 0.0);
    bool zeroLinear = a.size() < 2 || a[1] == Complex(0.0, 0.0);
    if (!zeroConst || !zeroLinear || f_.degree() < 2)
        throw HypothesisViolated("locus classification needs f with f(0) = f'(0) = 0");

    // Escape thresholds grow with |c|, so the values at the outer bound work
    // for the whole undecided annulus.
    GrowthConstants g = growth_constants(f_);
    const double margin = 1e-9;
    double cMax = kLocusOuterBound;
    uniformM_ = std::max({2.0, std::sqrt(2.0 * cMax), g.delta}) + margin;
    uniformR_ = std::max({uniformM_ + 2.0 * cMax, uniformM_ / g.d,
                          std::pow(uniformM_, g.p), 3.0}) +
                margin;
}

LocusVerdict LocusClassifier::classify(Complex c, int budget) const {
    if (budget < 4) throw PreconditionViolated("locus classification needs budget >= 4");

    double ac = std::abs(c);
    if (ac <= kLocusInnerBound) return {LocusVerdict::Kind::InsideByBound, 0};
    if (ac >= kLocusOuterBound) return {LocusVerdict::Kind::OutsideByBound, 0};

    const double M2 = uniformM_ * uniformM_;
    const double R2 = uniformR_ * uniformR_;
    Complex prev(0.0, 0.0);
    Complex cur(0.0, 0.0);
    for (int n = 0; n < budget; ++n) {
        if (std::norm(prev) > M2 && std::norm(cur) > M2)
            return {LocusVerdict::Kind::EscapedAt, n};
        if (std::norm(prev) > R2) return {LocusVerdict::Kind::EscapedAt, n};
        Complex next = cur * prev + c;
        prev = cur;
        cur = next;
    }
    if (std::norm(prev) > R2) return {LocusVerdict::Kind::EscapedAt, budget};
    return {LocusVerdict::Kind::BoundedAtBudget, budget};
}

RasterGrid locus_grid(const Region& region, int W, int H, const Polynomial& f,
                      int budget, int tileSize, int workers) {
    LocusClassifier cls(f);
    PixelEvaluator eval = [cls, budget](Complex c) {
        LocusVerdict v = cls.classify(c, budget);
        switch (v.kind) {
        case LocusVerdict::Kind::InsideByBound: return Pixel{PixelTag::Inside, -1, 0.0};
        case LocusVerdict::Kind::OutsideByBound: return Pixel{PixelTag::Escaped, 0, 0.0};
        case LocusVerdict::Kind::EscapedAt: return Pixel{PixelTag::Escaped, v.n, 0.0};
        default: return Pixel{PixelTag::Undecided, -1, 0.0};
        }
    };
    return sample_grid(region, W, H, eval, tileSize, workers);
}

} // namespace fibdyn
