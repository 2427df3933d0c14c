#include "frogbounds/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "frogbounds/analytic.hpp"

namespace frogbounds {

namespace {

// A walk more than this many steps beyond the deepest relevant vertex is
// written off: the return probability is below d^-64.
constexpr int kEscapeMargin = 64;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Distinct trials get distinct streams for any fixed seed (splitmix64 is a
// bijection), which is what makes thread partitioning invisible.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) + trial);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// (0, 1]; safe to feed to log().
double uniform01_pos(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Lemire multiply-shift with rejection; unbiased for any bound >= 1.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 mul = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(mul);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            mul = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(mul);
        }
    }
    return static_cast<std::uint64_t>(mul >> 64);
}

SurvivalEstimate make_survival(std::int64_t trials, std::int64_t successes) {
    SurvivalEstimate est;
    est.trials = trials;
    est.successes = successes;
    est.point = static_cast<double>(successes) / static_cast<double>(trials);
    est.ci95_halfwidth =
        1.96 * std::sqrt(est.point * (1.0 - est.point) / static_cast<double>(trials));
    return est;
}

struct Workspace {
    std::vector<std::int32_t> cur;
    std::vector<std::int32_t> next;
};

bool run_replica(const SimConfig& cfg, std::uint64_t trial, TreeArena& arena, Workspace& ws) {
    arena.reset();
    std::mt19937_64 rng(trial_seed(cfg.seed, trial));
    const double p = cfg.p.value();
    const auto nslots = static_cast<std::uint64_t>(arena.slot_count());

    arena.set_origin_awake(arena.root(), true);
    ws.cur.assign(1, static_cast<std::int32_t>(arena.root()));
    if (static_cast<std::int64_t>(ws.cur.size()) >= cfg.awake_cap) return true;

    for (int step = 0; step < cfg.horizon; ++step) {
        ws.next.clear();
        for (const std::int32_t v : ws.cur) {
            if (uniform01(rng) >= p) continue;  // death resolves before the move
            const int slot = static_cast<int>(bounded_uniform(rng, nslots));
            const auto w = static_cast<std::int32_t>(arena.neighbor(v, slot));
            if (!arena.origin_awake(w)) {
                arena.set_origin_awake(w, true);
                ws.next.push_back(w);  // the woken frog starts acting next step
            }
            ws.next.push_back(w);
        }
        std::swap(ws.cur, ws.next);
        if (ws.cur.empty()) return false;
        if (static_cast<std::int64_t>(ws.cur.size()) >= cfg.awake_cap) return true;
    }
    return true;
}

void check_trials(std::int64_t trials) {
    if (trials < 1) throw std::domain_error("trials must be >= 1");
}

}  // namespace

void SimConfig::validate() const {
    if (horizon < 1) throw std::domain_error("SimConfig: horizon must be >= 1");
    if (awake_cap < 1) throw std::domain_error("SimConfig: awake_cap must be >= 1");
    if (trials < 1) throw std::domain_error("SimConfig: trials must be >= 1");
}

TreeArena::TreeArena(Degree d) : d_(d.value()) {
    parent_.assign(1, -1);
    parent_slot_.assign(1, -1);
    depth_.assign(1, 0);
    awake_.assign(1, 0);
    links_.assign(static_cast<size_t>(d_) + 1, -1);
}

int TreeArena::neighbor(int v, int slot) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("TreeArena::neighbor: bad vertex");
    if (slot < 0 || slot > d_) throw std::out_of_range("TreeArena::neighbor: bad slot");
    const size_t idx =
        static_cast<size_t>(v) * static_cast<size_t>(d_ + 1) + static_cast<size_t>(slot);
    const std::int32_t existing = links_[idx];
    if (existing >= 0) return existing;

    const auto id = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(static_cast<std::int32_t>(v));
    parent_slot_.push_back(static_cast<std::int32_t>(slot));
    depth_.push_back(depth_[static_cast<size_t>(v)] + 1);
    awake_.push_back(0);
    links_.resize(links_.size() + static_cast<size_t>(d_ + 1), -1);
    links_[idx] = id;
    links_[static_cast<size_t>(id) * static_cast<size_t>(d_ + 1)] = static_cast<std::int32_t>(v);
    journal_.push_back(id);
    return id;
}

int TreeArena::neighbor_if_present(int v, int slot) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("TreeArena: bad vertex");
    if (slot < 0 || slot > d_) throw std::out_of_range("TreeArena: bad slot");
    return links_[static_cast<size_t>(v) * static_cast<size_t>(d_ + 1) + static_cast<size_t>(slot)];
}

void TreeArena::truncate(std::size_t mark) {
    if (mark > journal_.size()) throw std::invalid_argument("TreeArena::truncate: bad mark");
    while (journal_.size() > mark) {
        const std::int32_t id = journal_.back();  // always the newest vertex: creation is append-only
        journal_.pop_back();
        links_[static_cast<size_t>(parent_[static_cast<size_t>(id)]) * static_cast<size_t>(d_ + 1) +
               static_cast<size_t>(parent_slot_[static_cast<size_t>(id)])] = -1;
        parent_.pop_back();
        parent_slot_.pop_back();
        depth_.pop_back();
        awake_.pop_back();
        links_.resize(links_.size() - static_cast<size_t>(d_ + 1));
    }
}

void TreeArena::reset() {
    truncate(0);
    awake_[0] = 0;
}

bool TreeArena::validate() const {
    const auto count = parent_.size();
    const auto slots = static_cast<size_t>(d_ + 1);
    if (parent_slot_.size() != count || depth_.size() != count || awake_.size() != count ||
        links_.size() != count * slots)
        return false;
    if (parent_[0] != -1 || depth_[0] != 0) return false;
    if (journal_.size() != count - 1) return false;
    for (size_t i = 0; i < journal_.size(); ++i)
        if (journal_[i] != static_cast<std::int32_t>(i + 1)) return false;
    for (size_t v = 1; v < count; ++v) {
        const auto pv = parent_[v];
        if (pv < 0 || static_cast<size_t>(pv) >= v) return false;  // parents are strictly older
        if (depth_[v] != depth_[static_cast<size_t>(pv)] + 1) return false;
        const auto ps = parent_slot_[v];
        if (ps < 0 || ps > d_) return false;
        if (links_[static_cast<size_t>(pv) * slots + static_cast<size_t>(ps)] !=
            static_cast<std::int32_t>(v))
            return false;
        if (links_[v * slots] != pv) return false;  // back link sits in slot 0
    }
    for (size_t v = 0; v < count; ++v) {
        if (awake_[v] > 1) return false;
        for (size_t s = 0; s < slots; ++s) {
            const auto w = links_[v * slots + s];
            if (w < 0) continue;
            if (static_cast<size_t>(w) >= count) return false;
            const bool child_link = parent_[static_cast<size_t>(w)] == static_cast<std::int32_t>(v) &&
                                    parent_slot_[static_cast<size_t>(w)] == static_cast<std::int32_t>(s);
            const bool back_link = s == 0 && parent_[v] == w;
            if (!child_link && !back_link) return false;
        }
    }
    return true;
}

SurvivalEstimate simulate_frog_model(const SimConfig& config, int threads) {
    config.validate();
    if (threads < 1) throw std::invalid_argument("simulate_frog_model: threads must be >= 1");
    const std::int64_t trials = config.trials;
    const auto workers = static_cast<int>(std::min<std::int64_t>(threads, trials));

    std::vector<std::int64_t> successes(static_cast<size_t>(workers), 0);
    const std::int64_t chunk = trials / workers;
    const std::int64_t extra = trials % workers;
    auto run_range = [&](int w) {
        const std::int64_t beg = w * chunk + std::min<std::int64_t>(w, extra);
        const std::int64_t end = beg + chunk + (w < extra ? 1 : 0);
        TreeArena arena(config.d);
        Workspace ws;
        std::int64_t hits = 0;
        for (std::int64_t t = beg; t < end; ++t)
            hits += run_replica(config, static_cast<std::uint64_t>(t), arena, ws) ? 1 : 0;
        successes[static_cast<size_t>(w)] = hits;
    };

    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
        for (auto& th : pool) th.join();
    }
    const std::int64_t total = std::accumulate(successes.begin(), successes.end(), std::int64_t{0});
    return make_survival(trials, total);
}

bool simulate_one_replica(const SimConfig& config, std::uint64_t trial_index, TreeArena& arena) {
    config.validate();
    if (arena.degree() != config.d.value())
        throw std::invalid_argument("simulate_one_replica: arena degree mismatch");
    Workspace ws;
    return run_replica(config, trial_index, arena, ws);
}

SurvivalEstimate estimate_hit_probability(Degree d, Probability p, int n, std::int64_t trials,
                                          std::uint64_t seed) {
    if (n < 1) throw std::domain_error("estimate_hit_probability requires n >= 1");
    check_trials(trials);
    const double pv = p.value();
    const auto nslots = static_cast<std::uint64_t>(d.value() + 1);
    std::int64_t hits = 0;
    // The target sits at the end of a fixed label path: slot 0 from the
    // start, then slot 1 on each further level.  The walk is tracked as
    // (depth, length of common prefix with that path), which determines the
    // distance to the target without storing the tree.
    for (std::int64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        int depth = 0;
        int common = 0;
        while (true) {
            if (uniform01(rng) >= pv) break;
            const int slot = static_cast<int>(bounded_uniform(rng, nslots));
            if (depth > 0 && slot == 0) {
                --depth;
                common = std::min(common, depth);
            } else {
                const int expected = depth == 0 ? 0 : 1;
                if (common == depth && depth < n && slot == expected) ++common;
                ++depth;
            }
            if (depth == n && common == n) {
                ++hits;
                break;
            }
            if ((depth - common) + (n - common) > n + kEscapeMargin) break;
        }
    }
    return make_survival(trials, hits);
}

ReachSample sample_reaches(int n, const BranchRatio& b, std::mt19937_64& rng) {
    if (n < 1) throw std::domain_error("sample_reaches requires n >= 1");
    const double bv = b.value();
    const double log_b = bv > 0.0 ? std::log(bv) : 0.0;
    ReachSample rs;
    rs.advance.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int cap = n - j;
        int adv = 0;
        if (bv > 0.0) {
            // P[advance >= l] = b^l  <=>  advance = floor(log U / log b)
            const double ratio = std::log(uniform01_pos(rng)) / log_b;
            adv = ratio >= static_cast<double>(cap) ? cap : static_cast<int>(ratio);
        }
        rs.advance[static_cast<size_t>(j)] = adv;
    }
    return rs;
}

bool child_event_from_reaches(const ReachSample& reaches) {
    const int n = static_cast<int>(reaches.advance.size());
    if (n < 1) throw std::domain_error("child_event_from_reaches requires n >= 1");
    std::vector<char> handoff(static_cast<size_t>(n));
    // handoff[j] decides the event for the subpath x_j..x_n; reaches are
    // consumed as absolute indices reach = j + advance_j.
    for (int j = n - 1; j >= 0; --j) {
        const int adv = reaches.advance[static_cast<size_t>(j)];
        if (adv < 0 || adv > n - j)
            throw std::domain_error("child_event_from_reaches: advance out of range");
        const int reach = j + adv;
        bool ok = reach >= n;  // the frog at x_j makes it all the way
        if (!ok && reach == j + 1)
            ok = handoff[static_cast<size_t>(reach)] != 0;  // only the frog at x_{j+1} was newly woken
        else if (!ok && reach >= j + 2)
            // Relay through the next-to-last vertex reached; the frog at the
            // death vertex itself only counts when that relay frog never
            // moves.  This disjoint split, not the plain union of the two
            // events, is what the recurrence for phi computes.
            ok = handoff[static_cast<size_t>(reach - 1)] != 0 ||
                 (reaches.advance[static_cast<size_t>(reach - 1)] == 0 &&
                  handoff[static_cast<size_t>(reach)] != 0);
        handoff[static_cast<size_t>(j)] = ok ? 1 : 0;
    }
    return handoff[0] != 0;
}

SurvivalEstimate estimate_child_probability(Degree d, Probability p, int n, std::int64_t trials,
                                            std::uint64_t seed) {
    if (n < 1) throw std::domain_error("estimate_child_probability requires n >= 1");
    check_trials(trials);
    const BranchRatio b = beta(d, p);
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        const ReachSample rs = sample_reaches(n, b, rng);
        hits += child_event_from_reaches(rs) ? 1 : 0;
    }
    return make_survival(trials, hits);
}

MeanEstimate simulate_branching_offspring(Degree d, Probability p, int n, std::int64_t trials,
                                          std::uint64_t seed) {
    if (n < 1) throw std::domain_error("simulate_branching_offspring requires n >= 1");
    check_trials(trials);
    const int dv = d.value();
    std::int64_t leaves = 1;
    for (int i = 0; i < n; ++i) {
        leaves *= dv;
        if (leaves > 10'000)
            throw std::invalid_argument("simulate_branching_offspring requires d^n <= 10^4");
    }

    // Forward subtree down to depth n, built once: children are slots 1..d
    // everywhere (the root's slot 0 leads to the excluded neighbor).
    TreeArena arena(d);
    std::vector<std::vector<int>> levels(static_cast<size_t>(n) + 1);
    levels[0] = {arena.root()};
    for (int depth = 1; depth <= n; ++depth) {
        levels[static_cast<size_t>(depth)].reserve(levels[static_cast<size_t>(depth - 1)].size() *
                                                   static_cast<size_t>(dv));
        for (const int v : levels[static_cast<size_t>(depth - 1)])
            for (int s = 1; s <= dv; ++s)
                levels[static_cast<size_t>(depth)].push_back(arena.neighbor(v, s));
    }
    const int subtree_size = arena.vertex_count();
    const std::size_t base_mark = arena.mark();

    // Frogs live at depths 0..n-1; the walk of each records which subtree
    // vertices it lands on.
    std::vector<std::int32_t> frog_index(static_cast<size_t>(subtree_size), -1);
    std::int32_t frog_count = 0;
    for (int depth = 0; depth < n; ++depth)
        for (const int v : levels[static_cast<size_t>(depth)])
            frog_index[static_cast<size_t>(v)] = frog_count++;
    std::vector<std::vector<std::int32_t>> visits(static_cast<size_t>(frog_count));

    const double pv = p.value();
    const auto nslots = static_cast<std::uint64_t>(dv + 1);
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    std::vector<int> path(static_cast<size_t>(n) + 1);
    ReachSample rs;
    rs.advance.resize(static_cast<size_t>(n));

    for (std::int64_t t = 0; t < trials; ++t) {
        arena.truncate(base_mark);
        for (auto& vlist : visits) vlist.clear();
        std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));

        for (int depth = 0; depth < n; ++depth) {
            for (const int v : levels[static_cast<size_t>(depth)]) {
                const auto fi = static_cast<size_t>(frog_index[static_cast<size_t>(v)]);
                int cur = v;
                while (true) {
                    if (uniform01(rng) >= pv) break;
                    const int slot = static_cast<int>(bounded_uniform(rng, nslots));
                    const int w = arena.neighbor(cur, slot);
                    if (w < subtree_size) visits[fi].push_back(static_cast<std::int32_t>(w));
                    if (arena.depth(w) > n + kEscapeMargin) break;
                    cur = w;
                }
            }
        }

        std::int64_t children = 0;
        for (const int leaf : levels[static_cast<size_t>(n)]) {
            path[static_cast<size_t>(n)] = leaf;
            for (int k = n - 1; k >= 0; --k)
                path[static_cast<size_t>(k)] = arena.parent(path[static_cast<size_t>(k + 1)]);
            for (int j = 0; j < n; ++j) {
                const auto& seen =
                    visits[static_cast<size_t>(frog_index[static_cast<size_t>(path[static_cast<size_t>(j)])])];
                int adv = 0;
                for (int k = n; k > j; --k) {
                    if (std::find(seen.begin(), seen.end(),
                                  static_cast<std::int32_t>(path[static_cast<size_t>(k)])) !=
                        seen.end()) {
                        adv = k - j;
                        break;
                    }
                }
                rs.advance[static_cast<size_t>(j)] = adv;
            }
            children += child_event_from_reaches(rs) ? 1 : 0;
        }
        sum += children;
        sum_sq += children * children;
    }

    MeanEstimate est;
    est.trials = trials;
    est.mean = static_cast<double>(sum) / static_cast<double>(trials);
    if (trials > 1) {
        const double num = static_cast<double>(sum_sq) -
                           static_cast<double>(sum) * static_cast<double>(sum) /
                               static_cast<double>(trials);
        const double var = std::max(0.0, num / static_cast<double>(trials - 1));
        est.ci95_halfwidth = 1.96 * std::sqrt(var / static_cast<double>(trials));
    }
    return est;
}

}  // namespace frogbounds
