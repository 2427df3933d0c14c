#pragma once

#include <stdexcept>
#include <string>

namespace frogbounds {

/// A closed-form radicand drifted negative past rounding slack.  This means
/// the implementation is inconsistent with itself, not that the input is bad.
class NumericGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The interval handed to the root isolator does not bracket a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Branching number of the tree: every vertex has d+1 neighbors.
class Degree {
public:
    explicit Degree(int d) : d_(d) {
        if (d < 2)
            throw std::domain_error("Degree must be >= 2, got " + std::to_string(d));
    }
    int value() const noexcept { return d_; }

    friend bool operator==(Degree a, Degree b) noexcept { return a.d_ == b.d_; }

private:
    int d_;
};

/// Per-step survival probability of a frog, in [0, 1].
class Probability {
public:
    explicit Probability(double p) : p_(p) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("Probability must lie in [0, 1], got " + std::to_string(p));
    }
    double value() const noexcept { return p_; }

private:
    double p_;
};

/// Per-edge decay base of the hitting probability; lives in [0, 1/d] and
/// remembers which tree it belongs to.  Values are checked once here so the
/// numeric kernels can assume a valid domain.
class BranchRatio {
public:
    BranchRatio(double b, Degree d) : b_(b), d_(d) {
        if (!(b >= 0.0 && b <= 1.0 / d.value()))
            throw std::domain_error("BranchRatio must lie in [0, 1/d], got " + std::to_string(b) +
                                    " with d=" + std::to_string(d.value()));
    }
    double value() const noexcept { return b_; }
    Degree degree() const noexcept { return d_; }

private:
    double b_;
    Degree d_;
};

}  // namespace frogbounds
