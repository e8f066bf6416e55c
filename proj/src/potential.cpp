#include "fibdyn/potential.hpp"

#include <cmath>

#include "fibdyn/errors.hpp"
#include "fibdyn/orbit.hpp"

namespace fibdyn {

namespace {

double logplus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

// Shared tail-bounded estimator for lim log+|s_n| / d_n along
// s_{n+1} = s_n * s_{n-1} + c. The tail bound C * sum_{k>n} 1/d_k applies once
// the orbit has two consecutive moduli above M; before that the stop rule is
// suppressed. Values switch to interval log arithmetic once doubles run out.
GreenEstimate tail_estimate(Complex prev, Complex cur, const FibonacciSystem& sys,
                            double C, double M, double tol, int budget) {
    const DegreeSequence& ds = sys.degrees();
    const Complex c = sys.c();
    bool regime = false;
    int n = 0;
    while (true) {
        double ap = std::abs(prev);
        double ac = std::abs(cur);
        if (!regime && ap > M && ac > M) regime = true;
        if (regime) {
            double bound = C * ds.inv_tail(n);
            if (bound < tol)
                return {logplus(ap) / ds.degree(n), bound, n, true};
        }
        if (ap > kLogSwitchThreshold && ac > kLogSwitchThreshold) break;
        if (n >= budget)
            throw TolUnreachable("tail bound still above tolerance at the budget");
        Complex next = cur * prev + c;
        prev = cur;
        cur = next;
        ++n;
    }

    LogOrbit lo = log_orbit_from_pair({prev, cur, n}, sys);
    while (true) {
        double dn = ds.degree(lo.index);
        double bound = C * ds.inv_tail(lo.index) + lo.prevLog.width() / dn;
        if (bound < tol) return {lo.prevLog.mid() / dn, bound, lo.index, true};
        if (lo.index >= budget)
            throw TolUnreachable("tail bound still above tolerance at the budget");
        lo = log_orbit_extend(lo, sys);
    }
}

} // namespace

GreenConstants green_constants(const FibonacciSystem& sys) {
    EscapeConstants esc = escape_constants(sys);
    const DegreeSequence& ds = sys.degrees();
    double absC = std::abs(sys.c());

    GreenConstants gc;
    gc.rho = ds.rho();
    gc.R = esc.R;
    gc.A = std::max({std::log1p(absC / (esc.R * esc.R)), 5.0 * std::log(esc.R),
                     std::log1p(absC / (esc.R - absC))});

    double D = 0.0;
    for (int n = 1; n <= 64; ++n) {
        double rk = 1.0;
        for (int k = 0; k < n; ++k) {
            D = std::max(D, ds.degree(n - k - 1) * rk / ds.degree(n));
            rk *= gc.rho;
        }
    }
    gc.D = D;

    const double d1 = ds.degree(1);
    double seedDefect = 0.0;
    const double twoPi = 2.0 * std::acos(-1.0);
    for (int i = 0; i < 360; ++i) {
        Complex zc = std::polar(esc.R, twoPi * i / 360.0);
        double defect = logplus(std::abs(sys.f()(zc))) - d1 * logplus(std::abs(zc));
        seedDefect = std::max(seedDefect, std::abs(defect));
    }
    gc.B = std::log(sys.f().max_abs_coefficient() * (1.0 + d1 / esc.R)) + 2.0 * seedDefect;
    gc.C = gc.D * gc.A * gc.rho / (gc.rho - 1.0) + gc.B;
    return gc;
}

GreenEvaluator::GreenEvaluator(FibonacciSystem sys)
    : classifier_(std::move(sys)), gc_(green_constants(classifier_.system())) {}

GreenEstimate GreenEvaluator::diag(Complex z, double tol, int budget) const {
    if (!(tol > 0.0)) throw PreconditionViolated("tolerance must be positive");
    const FibonacciSystem& sys = classifier_.system();
    MembershipVerdict v = classifier_.classify(z, budget);
    if (v.kind == VerdictKind::ProvenInside) return {0.0, 0.0, 0, false};
    if (v.kind == VerdictKind::Undecided) return {0.0, tol, budget, false};
    return tail_estimate(z, sys.f()(z), sys, gc_.C, classifier_.constants().M, tol,
                         budget);
}

GreenEstimate GreenEvaluator::two_var(Complex w, Complex z, double tol,
                                      int budget) const {
    if (!(tol > 0.0)) throw PreconditionViolated("tolerance must be positive");
    const FibonacciSystem& sys = classifier_.system();
    const double R = classifier_.constants().R;
    if (!(std::abs(w) > R && std::abs(z) > R))
        throw OutsideDomain("two-variable escape rate needs |w|, |z| above the escape radius");
    double seed = std::abs(logplus(std::abs(w)) -
                           sys.degrees().degree(1) * logplus(std::abs(z)));
    double C = gc_.D * gc_.A * gc_.rho / (gc_.rho - 1.0) + seed;
    return tail_estimate(z, w, sys, C, classifier_.constants().M, tol, budget);
}

GreenEstimate green_diag(Complex z, const FibonacciSystem& sys, double tol, int budget) {
    return GreenEvaluator(sys).diag(z, tol, budget);
}

GreenEstimate green_2d(Complex w, Complex z, const FibonacciSystem& sys, double tol,
                       int budget) {
    return GreenEvaluator(sys).two_var(w, z, tol, budget);
}

std::vector<double> green_sequence(Complex z, const FibonacciSystem& sys, int nMax) {
    if (!sys.is_classical())
        throw UnsupportedExponents("escape-rate sequence needs exponents (1,1)");
    if (nMax < 0) throw PreconditionViolated("nMax must be >= 0");

    const DegreeSequence& ds = sys.degrees();
    const Complex c = sys.c();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(nMax) + 1);

    Complex prev = z, cur = sys.f()(z);
    int n = 0;
    while (n <= nMax) {
        double ap = std::abs(prev);
        if (ap > kLogSwitchThreshold && std::abs(cur) > kLogSwitchThreshold) break;
        out.push_back(logplus(ap) / ds.degree(n));
        Complex next = cur * prev + c;
        prev = cur;
        cur = next;
        ++n;
    }
    if (n <= nMax) {
        LogOrbit lo = log_orbit_from_pair({prev, cur, n}, sys);
        while (lo.index <= nMax) {
            out.push_back(lo.prevLog.mid() / ds.degree(lo.index));
            if (lo.index == nMax) break;
            lo = log_orbit_extend(lo, sys);
        }
    }
    return out;
}

CapacityResult capacity_sigma(const Polynomial& f, int nTerms) {
    if (nTerms < 2) throw PreconditionViolated("capacity needs nTerms >= 2");
    if (f.is_zero() || f.degree() < 1)
        throw PreconditionViolated("capacity needs deg f >= 1");

    DegreeSequence ds(f.degree(), 1, 1);
    double sum = 0.0;
    double sign = 1.0;
    for (int n = 0; n < nTerms; ++n) {
        sum += sign / (ds.degree(n) * ds.degree(n + 1));
        sign = -sign;
    }
    double logLead = std::log(std::abs(f.leading_coefficient()));

    CapacityResult r;
    r.sigma = logLead * sum;
    r.tailBound = std::abs(logLead) / (ds.degree(nTerms) * ds.degree(nTerms + 1));
    r.termsUsed = nTerms;
    return r;
}

double bottcher_log_modulus(Complex w, Complex z, const FibonacciSystem& sys,
                            int nTerms) {
    if (!sys.is_classical())
        throw UnsupportedExponents("limit coordinate needs exponents (1,1)");
    if (nTerms < 1) throw PreconditionViolated("nTerms must be >= 1");
    EscapeConstants esc = escape_constants(sys);
    if (!(std::abs(w) > esc.R && std::abs(z) > esc.R))
        throw OutsideDomain("limit coordinate needs |w|, |z| above the escape radius");

    const int N = std::min(nTerms, DegreeSequence::kHorizon);
    const Complex c = sys.c();
    Complex prev = z, cur = w;
    int n = 0;
    while (n < N) {
        if (std::abs(prev) > kLogSwitchThreshold && std::abs(cur) > kLogSwitchThreshold)
            break;
        Complex next = cur * prev + c;
        prev = cur;
        cur = next;
        ++n;
    }
    double LN;
    if (n == N) {
        LN = std::log(std::abs(prev));
    } else {
        LogOrbit lo = log_orbit_from_pair({prev, cur, n}, sys);
        while (lo.index < N) lo = log_orbit_extend(lo, sys);
        LN = lo.prevLog.mid();
    }
    return LN / std::pow(sys.degrees().rho(), N);
}

} // namespace fibdyn
