#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frogbounds/types.hpp"

namespace frogbounds {

/// Description of a full-model Monte Carlo run.  horizon / awake_cap / trials
/// can be adjusted after construction; validate() re-checks them and every
/// simulation entry point calls it.
struct SimConfig {
    Degree d;
    Probability p;
    int horizon = 200;
    std::int64_t awake_cap = 1'000'000;
    std::int64_t trials = 10'000;
    std::uint64_t seed = 1;

    SimConfig(Degree d_, Probability p_) : d(d_), p(p_) {}
    void validate() const;
};

struct SurvivalEstimate {
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double point = 0.0;
    double ci95_halfwidth = 0.0;
};

struct MeanEstimate {
    std::int64_t trials = 0;
    double mean = 0.0;
    double ci95_halfwidth = 0.0;
};

/// Lazily grown patch of the infinite (d+1)-regular tree.  Vertex 0 is the
/// root; every vertex exposes d+1 neighbor slots (slot 0 of a non-root vertex
/// is its parent).  Vertices materialize on first touch and can be undone in
/// LIFO order through mark()/truncate(), which is how replicas reuse one
/// arena without reallocating.
class TreeArena {
public:
    explicit TreeArena(Degree d);

    int degree() const noexcept { return d_; }
    int slot_count() const noexcept { return d_ + 1; }
    int root() const noexcept { return 0; }
    int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }

    int parent(int v) const noexcept { return parent_[static_cast<size_t>(v)]; }
    int depth(int v) const noexcept { return depth_[static_cast<size_t>(v)]; }

    /// Neighbor in the given slot, created if not yet present.
    int neighbor(int v, int slot);
    /// Same lookup without materializing; -1 if absent.
    int neighbor_if_present(int v, int slot) const;

    bool origin_awake(int v) const noexcept { return awake_[static_cast<size_t>(v)] != 0; }
    void set_origin_awake(int v, bool awake) noexcept {
        awake_[static_cast<size_t>(v)] = awake ? 1 : 0;
    }

    /// Journal position; pass to truncate() to undo later creations.
    std::size_t mark() const noexcept { return journal_.size(); }
    /// Undo every vertex created after the mark, clearing their parents' links.
    void truncate(std::size_t mark);
    /// Back to a lone root with its frog asleep.
    void reset();

    /// Structural invariants: mutual parent/child linkage, depths, back
    /// links, one frog slot per vertex, journal in creation order.
    bool validate() const;

private:
    int d_;
    std::vector<std::int32_t> parent_;       // -1 at root
    std::vector<std::int32_t> parent_slot_;  // slot of parent_ that points here
    std::vector<std::int32_t> depth_;
    std::vector<std::int32_t> links_;        // slot_count() entries per vertex, -1 = absent
    std::vector<std::uint8_t> awake_;        // the frog originating at each vertex
    std::vector<std::int32_t> journal_;      // creation order, for truncate()
};

/// Run config.trials independent replicas of the frog model.  Each step every
/// awake frog dies with probability 1-p, otherwise hops to a uniform
/// neighbor; landing on a sleeping frog wakes it and it acts from the next
/// step.  A replica survives if any frog is awake at the horizon or the
/// awake count ever reaches awake_cap.  Per-trial RNG streams are derived
/// from (seed, trial index), so the result is bit-identical for any thread
/// count.
SurvivalEstimate simulate_frog_model(const SimConfig& config, int threads = 1);

/// One replica on a caller-owned arena (reset here first).  Exposed so tests
/// can inspect the arena afterwards.
bool simulate_one_replica(const SimConfig& config, std::uint64_t trial_index, TreeArena& arena);

/// Single-frog estimator of the probability of ever visiting a fixed vertex
/// at distance n; targets beta(d,p)^n.
SurvivalEstimate estimate_hit_probability(Degree d, Probability p, int n,
                                          std::int64_t trials, std::uint64_t seed);

/// Reaches along a path x_0..x_n: advance[j] is how many path steps past x_j
/// the frog at x_j ever gets, capped at n-j.  The cap does not change any of
/// the events the evaluator reads off the sample (they only look below n).
struct ReachSample {
    std::vector<int> advance;
};

/// Inversion sampling of the reaches: P[advance_j >= l] = b^l, independent
/// across j.
ReachSample sample_reaches(int n, const BranchRatio& b, std::mt19937_64& rng);

/// Evaluate the cascade event "x_n becomes a child of x_0" from the reaches:
/// the frog at x_0 either gets to x_n itself, or dies at some x_l on the way
/// and hands off -- to the frog it woke at x_{l-1}, or, when that frog never
/// moves, to the one at x_l.  The two relay branches are disjoint by
/// construction, which is exactly the measure the phi recurrence computes.
bool child_event_from_reaches(const ReachSample& reaches);

/// Monte Carlo of the cascade event by sampled reaches; targets
/// phi_n(beta(d,p)).
SurvivalEstimate estimate_child_probability(Degree d, Probability p, int n,
                                            std::int64_t trials, std::uint64_t seed);

/// Full-trajectory estimator of the mean number of depth-n descendants
/// recruited from the root in its forward subtree; targets
/// d^n * phi_n(beta(d,p)).  Rejects d^n > 10^4.
MeanEstimate simulate_branching_offspring(Degree d, Probability p, int n,
                                          std::int64_t trials, std::uint64_t seed);

}  // namespace frogbounds
