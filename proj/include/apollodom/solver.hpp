#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apollodom/bounds.hpp"
#include "apollodom/domination.hpp"
#include "apollodom/dyadic.hpp"
#include "apollodom/errors.hpp"
#include "apollodom/graph.hpp"
#include "apollodom/network.hpp"

namespace apollodom {

struct SolveOptions {
    int threads = 1;
    /// Total node-expansion budget across all cardinality stages.
    std::uint64_t budget = 1'000'000'000;
    /// [lo, hi] on gamma; derived from the diameter bound and the best
    /// applicable upper bounds when omitted.
    std::optional<std::pair<int, int>> bracket;
    bool pruning = true;
    /// Skip candidate sets that are not lexicographically minimal under the
    /// seed-triangle rotation. Network instances only; validated to return
    /// the same result as the default path.
    bool symmetry_reduction = false;
    /// The solver densifies pairwise distances; instances beyond this are
    /// out of reach for subset search anyway.
    std::size_t table_cap = 4096;
};

struct SolverResult {
    int gamma = 0;
    std::vector<VertexId> witness; // lexicographically least minimum set
    Variant variant = Variant::porous;
    std::uint64_t candidates_examined = 0;
    std::uint64_t pruned = 0;
    int lower_bound_used = 0;
    int upper_bound_used = 0;
};

namespace detail {

// Weights inside the search are exact dyadic fixed-point values: every
// contribution 1/2^(d-1) is scaled by 2^(diam-1) into an integer, so the
// domination predicate is `scaled weight >= 2^(diam-1)` with no rounding
// anywhere. Construction refuses instances whose scaled totals could not
// fit 63 bits.
struct SolverTables {
    std::size_t n = 0;
    int diameter = 0;
    unsigned scale_exp = 0;
    std::uint64_t threshold = 0;
    std::vector<std::uint64_t> contrib; // contrib[u*n+v] = 2^(scale_exp+1-d(u,v))

    std::uint64_t at(VertexId u, VertexId v) const { return contrib[static_cast<std::size_t>(u) * n + v]; }
};

inline SolverTables build_solver_tables(const Graph& g, std::size_t table_cap) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("solver: empty graph");
    if (n > table_cap)
        throw SizeLimitError("solver: " + std::to_string(n) +
                             " vertices exceed the solver table cap of " + std::to_string(table_cap));
    std::vector<std::uint32_t> dist(n * n);
    std::uint32_t diam = 0;
    for (std::size_t s = 0; s < n; ++s) {
        auto row = bfs_distances(g, static_cast<VertexId>(s));
        for (std::size_t v = 0; v < n; ++v) {
            if (row[v] == no_path)
                throw std::invalid_argument("solver: graph must be connected");
            dist[s * n + v] = row[v];
            diam = std::max(diam, row[v]);
        }
    }
    SolverTables t;
    t.n = n;
    t.diameter = static_cast<int>(diam);
    t.scale_exp = diam > 0 ? diam - 1 : 0;
    if (t.scale_exp + 1 + std::bit_width(n) > 62)
        throw SizeLimitError("solver: diameter too large for exact 64-bit weight accumulation");
    t.threshold = std::uint64_t{1} << t.scale_exp;
    t.contrib.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        t.contrib[i] = std::uint64_t{1} << (t.scale_exp + 1 - dist[i]);
    return t;
}

struct VertexVectorHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

/// Exact nonporous domination test for complete candidate sets, with a
/// per-(member, removed-set) cache of restricted BFS rows. The cache is an
/// optimization only; hits recur across cardinality stages.
class NonporousEvaluator {
public:
    explicit NonporousEvaluator(const Graph& g, bool use_cache = true)
        : g_(g), use_cache_(use_cache) {}

    bool dominates(const std::vector<VertexId>& members) {
        const std::size_t n = g_.vertex_count();
        rows_.clear();
        scratch_.clear();
        scratch_.reserve(members.size()); // row references must stay stable
        for (std::size_t i = 0; i < members.size(); ++i) rows_.push_back(&row_for(members, i));
        for (std::size_t v = 0; v < n; ++v) {
            if (std::binary_search(members.begin(), members.end(), static_cast<VertexId>(v)))
                continue; // members receive exactly 2
            DyadicWeight w;
            for (const auto* row : rows_)
                if ((*row)[v] != no_path) w += DyadicWeight::distance_term((*row)[v]);
            if (!w.at_least_one()) return false;
        }
        return true;
    }

private:
    const std::vector<std::uint32_t>& row_for(const std::vector<VertexId>& members, std::size_t i) {
        key_.clear();
        key_.push_back(members[i]);
        for (std::size_t j = 0; j < members.size(); ++j)
            if (j != i) key_.push_back(members[j]);
        if (use_cache_) {
            auto it = cache_.find(key_);
            if (it != cache_.end()) return it->second;
        }
        std::vector<char> blocked(g_.vertex_count(), 0);
        for (std::size_t j = 0; j < members.size(); ++j)
            if (j != i) blocked[members[j]] = 1;
        auto row = bfs_distances_avoiding(g_, members[i], blocked);
        if (!use_cache_) {
            scratch_.push_back(std::move(row));
            return scratch_.back();
        }
        if (cache_.size() > (1u << 18)) cache_.clear();
        return cache_.emplace(key_, std::move(row)).first->second;
    }

    const Graph& g_;
    bool use_cache_;
    std::vector<VertexId> key_;
    std::vector<const std::vector<std::uint32_t>*> rows_;
    std::vector<std::vector<std::uint32_t>> scratch_;
    std::unordered_map<std::vector<VertexId>, std::vector<std::uint32_t>, VertexVectorHash> cache_;
};

/// DFS over size-s subsets in lexicographic order, restricted to first
/// elements congruent to `worker_index` mod `worker_count`. Weights are
/// maintained incrementally; cuts are admissible, so the first surviving
/// witness in a slice is the slice's lexicographic minimum.
class StageWorker {
public:
    StageWorker(const SolverTables& t, const Graph& g, Variant variant, int target_size,
                std::uint64_t budget, bool pruning, const std::vector<VertexId>* sigma)
        : t_(t),
          variant_(variant),
          s_(target_size),
          budget_(budget),
          pruning_(pruning),
          sigma_(sigma),
          W_(t.n, 0),
          deficient_(t.n),
          np_(variant == Variant::nonporous ? std::make_unique<NonporousEvaluator>(g) : nullptr) {}

    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    bool exhausted = false;
    std::optional<std::vector<VertexId>> witness;

    void run_slice(std::size_t worker_index, std::size_t worker_count) {
        const std::size_t first_max = t_.n - static_cast<std::size_t>(s_);
        for (std::size_t e = worker_index; e <= first_max; e += worker_count) {
            if (!expand()) return;
            push(static_cast<VertexId>(e));
            prefix_.push_back(static_cast<VertexId>(e));
            const bool found = s_ == 1 ? leaf() : dfs(static_cast<VertexId>(e), s_ - 1);
            if (found) return;
            prefix_.pop_back();
            pop(static_cast<VertexId>(e));
            if (exhausted) return;
        }
    }

private:
    bool expand() {
        if (examined >= budget_) {
            exhausted = true;
            return false;
        }
        ++examined;
        return true;
    }

    void push(VertexId u) {
        const std::uint64_t* row = t_.contrib.data() + static_cast<std::size_t>(u) * t_.n;
        for (std::size_t v = 0; v < t_.n; ++v) {
            const std::uint64_t before = W_[v];
            W_[v] = before + row[v];
            if (before < t_.threshold && W_[v] >= t_.threshold) --deficient_;
        }
    }

    void pop(VertexId u) {
        const std::uint64_t* row = t_.contrib.data() + static_cast<std::size_t>(u) * t_.n;
        for (std::size_t v = 0; v < t_.n; ++v) {
            const std::uint64_t before = W_[v];
            W_[v] = before - row[v];
            if (before >= t_.threshold && W_[v] < t_.threshold) ++deficient_;
        }
    }

    bool orbit_minimal(const std::vector<VertexId>& set) const {
        if (!sigma_) return true;
        std::vector<VertexId> image = set;
        for (int round = 0; round < 2; ++round) {
            for (VertexId& v : image) v = (*sigma_)[v];
            std::vector<VertexId> sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (std::lexicographical_compare(sorted.begin(), sorted.end(), set.begin(), set.end()))
                return false;
        }
        return true;
    }

    bool accept_leaf() {
        // porous weights already meet the threshold everywhere
        if (!orbit_minimal(prefix_)) return false;
        if (variant_ == Variant::porous) {
            witness = prefix_;
            return true;
        }
        if (np_->dominates(prefix_)) {
            witness = prefix_;
            return true;
        }
        return false;
    }

    bool leaf() { return deficient_ == 0 && accept_leaf(); }

    // Lexicographically least completion of the current prefix by `count`
    // ids above `last`; used when the prefix already dominates porously.
    bool take_least_completion(VertexId last, int count) {
        for (int i = 1; i <= count; ++i) prefix_.push_back(last + static_cast<VertexId>(i));
        // a non-minimal completion here would contradict the earlier search
        assert(orbit_minimal(prefix_));
        witness = prefix_;
        return true;
    }

    bool dfs(VertexId last, int remaining) {
        if (variant_ == Variant::porous && deficient_ == 0)
            return take_least_completion(last, remaining);
        if (pruning_ && deficient_ > 0) {
            std::size_t vstar = 0;
            std::uint64_t wmin = ~std::uint64_t{0};
            for (std::size_t v = 0; v < t_.n; ++v)
                if (W_[v] < wmin) {
                    wmin = W_[v];
                    vstar = v;
                }
            std::uint64_t maxc = 0;
            for (std::size_t u = last + 1; u < t_.n; ++u)
                maxc = std::max(maxc, t_.at(static_cast<VertexId>(u), static_cast<VertexId>(vstar)));
            if (wmin + static_cast<std::uint64_t>(remaining) * maxc < t_.threshold) {
                ++pruned;
                return false;
            }
        }
        if (remaining == 1) return last_level(last);
        const std::size_t u_max = t_.n - static_cast<std::size_t>(remaining);
        for (std::size_t u = last + 1; u <= u_max; ++u) {
            if (!expand()) return false;
            push(static_cast<VertexId>(u));
            prefix_.push_back(static_cast<VertexId>(u));
            if (dfs(static_cast<VertexId>(u), remaining - 1)) return true;
            prefix_.pop_back();
            pop(static_cast<VertexId>(u));
            if (exhausted) return false;
        }
        return false;
    }

    bool last_level(VertexId last) {
        deficient_list_.clear();
        for (std::size_t v = 0; v < t_.n; ++v)
            if (W_[v] < t_.threshold) deficient_list_.push_back(static_cast<VertexId>(v));
        std::size_t vstar = 0;
        std::uint64_t need = 0;
        if (!deficient_list_.empty()) {
            std::uint64_t wmin = ~std::uint64_t{0};
            for (VertexId v : deficient_list_)
                if (W_[v] < wmin) {
                    wmin = W_[v];
                    vstar = v;
                }
            need = t_.threshold - W_[vstar];
        }
        for (std::size_t u = last + 1; u < t_.n; ++u) {
            if (!deficient_list_.empty() &&
                t_.at(static_cast<VertexId>(u), static_cast<VertexId>(vstar)) < need) {
                ++pruned;
                continue;
            }
            if (!expand()) return false;
            bool covers = true;
            for (VertexId v : deficient_list_) {
                if (W_[v] + t_.at(static_cast<VertexId>(u), v) < t_.threshold) {
                    covers = false;
                    break;
                }
            }
            if (!covers) continue;
            prefix_.push_back(static_cast<VertexId>(u));
            const bool found = accept_leaf();
            if (found) return true;
            prefix_.pop_back();
        }
        return false;
    }

    const SolverTables& t_;
    Variant variant_;
    int s_;
    std::uint64_t budget_;
    bool pruning_;
    const std::vector<VertexId>* sigma_;
    std::vector<std::uint64_t> W_;
    std::size_t deficient_;
    std::vector<VertexId> prefix_;
    std::vector<VertexId> deficient_list_;
    std::unique_ptr<NonporousEvaluator> np_;
};

struct StageOutcome {
    std::optional<std::vector<VertexId>> witness;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    bool exhausted = false;
};

/// One cardinality stage. Workers own static slices (first element mod
/// worker count) and never communicate, so witness, counts, and budget
/// behavior are reproducible for a fixed thread count, and the merged
/// witness is thread-count independent.
inline StageOutcome run_stage(const SolverTables& t, const Graph& g, Variant variant, int s,
                              std::uint64_t stage_budget, const SolveOptions& opts,
                              const std::vector<VertexId>* sigma) {
    const std::size_t slots = t.n - static_cast<std::size_t>(s) + 1;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opts.threads)), slots));
    std::vector<std::unique_ptr<StageWorker>> states;
    states.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t share = stage_budget / workers + (w == 0 ? stage_budget % workers : 0);
        states.push_back(std::make_unique<StageWorker>(t, g, variant, s, share, opts.pruning, sigma));
    }
    if (workers == 1) {
        states[0]->run_slice(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&states, w, workers] { states[w]->run_slice(w, workers); });
        for (auto& th : pool) th.join();
    }
    StageOutcome out;
    for (auto& st : states) {
        out.examined += st->examined;
        out.pruned += st->pruned;
        out.exhausted = out.exhausted || st->exhausted;
        if (st->witness &&
            (!out.witness || std::lexicographical_compare(st->witness->begin(), st->witness->end(),
                                                          out.witness->begin(), out.witness->end())))
            out.witness = std::move(st->witness);
    }
    return out;
}

inline DyadicWeight dyadic_one_minus(const DyadicWeight& w) {
    assert(!w.at_least_one());
    return DyadicWeight((BigInt(1) << w.exponent()) - w.numerator(), w.exponent());
}

inline SolverResult exact_gamma_impl(const Graph& g, Variant variant, const SolveOptions& opts,
                                     const std::vector<VertexId>* sigma) {
    auto tables = build_solver_tables(g, opts.table_cap);
    const std::size_t n = tables.n;
    int lo, hi;
    if (opts.bracket) {
        lo = opts.bracket->first;
        hi = opts.bracket->second;
    } else {
        lo = diam_lower_bound_gamma(tables.diameter);
        const BigInt order_floor = 2 * (BigInt(n) + 2) / 5;
        hi = static_cast<int>(std::min<BigInt>(BigInt(n), order_floor));
    }
    lo = std::max(lo, 1);
    hi = std::min<int>(hi, static_cast<int>(n));
    if (hi < lo)
        throw InfeasibleBracketError("exact_gamma: empty bracket [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");

    std::uint64_t examined = 0, pruned = 0;
    for (int s = lo; s <= hi; ++s) {
        const std::uint64_t remaining = opts.budget > examined ? opts.budget - examined : 0;
        auto outcome = run_stage(tables, g, variant, s, remaining, opts, sigma);
        examined += outcome.examined;
        pruned += outcome.pruned;
        if (outcome.exhausted)
            throw BudgetExceededError(s, outcome.witness ? s : hi, examined, pruned);
        if (outcome.witness) {
            SolverResult r;
            r.gamma = s;
            r.witness = std::move(*outcome.witness);
            r.variant = variant;
            r.candidates_examined = examined;
            r.pruned = pruned;
            r.lower_bound_used = lo;
            r.upper_bound_used = hi;
            return r;
        }
    }
    throw InfeasibleBracketError("exact_gamma: bracket [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) +
                                 "] exhausted without a witness; upper bound is wrong");
}

} // namespace detail

/// Exact minimum porous / nonporous exponential domination number by
/// cardinality-staged lexicographic subset search. The returned witness is
/// the lexicographically least minimum set regardless of thread count.
/// Throws BudgetExceededError (with the proved bracket) when the expansion
/// budget runs out, and InfeasibleBracketError if the bracket is empty or
/// exhausted, which would mean a bound supplier is wrong.
/// Symmetry reduction has no effect here; only network instances carry the
/// automorphism it needs.
inline SolverResult exact_gamma(const Graph& g, Variant variant, SolveOptions opts = {}) {
    return detail::exact_gamma_impl(g, variant, opts, nullptr);
}

inline SolverResult exact_gamma(const ApollonianNetwork& net, Variant variant,
                                SolveOptions opts = {}) {
    if (!opts.bracket) {
        const auto br = bounds_report(net.level());
        const BigInt hi_big = std::min<BigInt>(BigInt(net.vertex_count()), br.best_upper);
        opts.bracket = {{br.lower_diam, static_cast<int>(hi_big)}};
    }
    std::vector<VertexId> sigma;
    if (opts.symmetry_reduction) sigma = net.rotation_automorphism();
    return detail::exact_gamma_impl(net.graph(), variant, opts,
                                    opts.symmetry_reduction ? &sigma : nullptr);
}

/// Worst-vertex deficiency that must survive even an optimistic completion
/// of `partial` to `target_size` members, each adding the maximum 2
/// everywhere. Zero means the branch cannot be discarded; with picks
/// remaining the optimistic total always reaches 1, so this cut only bites
/// through the candidate-aware refinement the search engine applies.
inline DyadicWeight prune_bound(const Graph& g, const CandidateSet& partial, int target_size) {
    if (static_cast<int>(partial.size()) >= target_size)
        throw std::invalid_argument("prune_bound: partial set must be smaller than the target size");
    auto wv = weight_vector(g, partial);
    const DyadicWeight* worst = &wv.weights[0];
    for (const auto& w : wv.weights)
        if (w < *worst) worst = &w;
    DyadicWeight optimistic = *worst;
    optimistic += DyadicWeight(2 * (target_size - static_cast<int>(partial.size())), 0);
    if (optimistic.at_least_one()) return DyadicWeight::zero();
    return detail::dyadic_one_minus(optimistic);
}

inline DyadicWeight prune_bound(const ApollonianNetwork& net, const CandidateSet& partial,
                                int target_size) {
    return prune_bound(net.graph(), partial, target_size);
}

/// Independent optimality re-check: plain lexicographic enumeration with no
/// pruning and full exact weight vectors per candidate. True iff no set of
/// size claimed-1 dominates and some set of size claimed does.
inline bool verify_optimality(const Graph& g, Variant variant, int claimed_gamma,
                              std::uint64_t budget = 1'000'000'000) {
    if (claimed_gamma < 1) throw std::invalid_argument("verify_optimality: claimed gamma must be >= 1");
    const std::size_t n = g.vertex_count();
    std::uint64_t evaluated = 0;
    auto dominates_members = [&](const std::vector<VertexId>& members) {
        if (++evaluated > budget) throw BudgetExceededError(0, claimed_gamma, evaluated, 0);
        return is_dominating(g, CandidateSet{members, variant});
    };
    // every size-(claimed-1) subset must fail
    std::vector<VertexId> idx;
    auto enumerate = [&](int r, auto&& visit) -> bool {
        idx.clear();
        if (r == 0) return visit(idx);
        if (static_cast<std::size_t>(r) > n) return false;
        for (int i = 0; i < r; ++i) idx.push_back(static_cast<VertexId>(i));
        while (true) {
            if (visit(idx)) return true;
            int i = r - 1;
            while (i >= 0 && idx[i] == n - static_cast<std::size_t>(r - i)) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    const bool smaller_dominates =
        enumerate(claimed_gamma - 1, [&](const std::vector<VertexId>& m) { return dominates_members(m); });
    if (smaller_dominates) return false;
    return enumerate(claimed_gamma,
                     [&](const std::vector<VertexId>& m) { return dominates_members(m); });
}

inline bool verify_optimality(const ApollonianNetwork& net, Variant variant, int claimed_gamma,
                              std::uint64_t budget = 1'000'000'000) {
    return verify_optimality(net.graph(), variant, claimed_gamma, budget);
}

} // namespace apollodom
