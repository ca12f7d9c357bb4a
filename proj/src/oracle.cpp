#include "ic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ic/census.hpp"
#include "ic/errors.hpp"
#include "ic/graph6.hpp"
#include "ic/parallel.hpp"
#include "ic/recognition.hpp"

namespace ic {

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::m: return "m";
        case Quantity::m_odd: return "m_odd";
        case Quantity::m_even: return "m_even";
        case Quantity::m_odd_holes: return "m_odd_holes";
        case Quantity::p2: return "p2";
        case Quantity::p2_odd: return "p2_odd";
        case Quantity::p2_even: return "p2_even";
    }
    return "?";
}

Quantity parse_quantity(const std::string& text) {
    for (Quantity q : {Quantity::m, Quantity::m_odd, Quantity::m_even, Quantity::m_odd_holes, Quantity::p2, Quantity::p2_odd,
                       Quantity::p2_even})
        if (to_string(q) == text) return q;
    throw InputError("unknown quantity '" + text + "' (m, m_odd, m_even, m_odd_holes, p2, p2_odd, p2_even)");
}

bool is_path_quantity(Quantity q) { return q == Quantity::p2 || q == Quantity::p2_odd || q == Quantity::p2_even; }

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// graph6 bit order: column j = 1..n-1, row i < j.
std::vector<std::pair<int, int>> edge_order(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) out.emplace_back(i, j);
    return out;
}

PathParity parity_of(Quantity q) {
    if (q == Quantity::p2_odd) return PathParity::odd;
    if (q == Quantity::p2_even) return PathParity::even;
    return PathParity::all;
}

// Small-graph kernel on 32-bit rows; mirrors the census engine without
// the allocation it does per call.
struct Kernel {
    int n;
    std::uint32_t adj[8];

    std::uint64_t by_len[9];
    int anchor;
    std::uint32_t allowed;
    std::uint32_t closers;

    void cycle_step(int last, std::uint32_t blocked, int len) {
        std::uint32_t cand = adj[last] & allowed & ~blocked;
        by_len[len + 1] += static_cast<std::uint64_t>(std::popcount(cand & closers));
        std::uint32_t open = cand & ~adj[anchor];
        if (!open) return;
        std::uint32_t nb = blocked | adj[last] | (1U << last);
        if (!(closers & ~nb)) return;
        for (; open; open &= open - 1) cycle_step(std::countr_zero(open), nb, len + 1);
    }

    void count_cycles() {
        std::fill(std::begin(by_len), std::end(by_len), 0);
        const std::uint32_t all = (1U << n) - 1;
        for (anchor = 0; anchor < n; ++anchor) {
            allowed = all & ~((2U << anchor) - 1);
            for (std::uint32_t firsts = adj[anchor] & allowed; firsts; firsts &= firsts - 1) {
                int p1 = std::countr_zero(firsts);
                closers = adj[anchor] & allowed & ~((2U << p1) - 1);
                cycle_step(p1, 1U << anchor, 2);
            }
        }
    }

    // paths[y][e & 1] for paths from the current root
    std::uint64_t paths[8][2];

    void path_step(int last, std::uint32_t blocked, int edges) {
        std::uint32_t cand = adj[last] & ~blocked;
        if (!cand) return;
        std::uint32_t nb = blocked | adj[last] | (1U << last);
        for (; cand; cand &= cand - 1) {
            int z = std::countr_zero(cand);
            ++paths[z][(edges + 1) & 1];
            path_step(z, nb, edges + 1);
        }
    }

    std::uint64_t best_pair(PathParity parity) {
        std::uint64_t best = 0;
        for (int x = 0; x + 1 < n; ++x) {
            std::memset(paths, 0, sizeof paths);
            path_step(x, 0, 0);
            for (int y = x + 1; y < n; ++y) {
                // odd vertex count = even edge count
                std::uint64_t v = parity == PathParity::odd    ? paths[y][0]
                                  : parity == PathParity::even ? paths[y][1]
                                                               : paths[y][0] + paths[y][1];
                best = std::max(best, v);
            }
        }
        return best;
    }

    std::uint64_t value(Quantity q) {
        if (is_path_quantity(q)) return n < 2 ? 0 : best_pair(parity_of(q));
        count_cycles();
        std::uint64_t odd = 0;
        std::uint64_t total = 0;
        for (int len = 3; len <= n; ++len) {
            total += by_len[len];
            if (len & 1) odd += by_len[len];
        }
        switch (q) {
            case Quantity::m_odd: return odd;
            case Quantity::m_even: return total - odd;
            case Quantity::m_odd_holes: return odd - by_len[3];
            default: return total;
        }
    }
};

void load_kernel(Kernel& k, int n, const std::vector<std::pair<int, int>>& order, std::uint64_t code) {
    k.n = n;
    std::fill(std::begin(k.adj), std::end(k.adj), 0);
    for (std::uint64_t bits = code; bits; bits &= bits - 1) {
        auto [i, j] = order[static_cast<std::size_t>(std::countr_zero(bits))];
        k.adj[i] |= 1U << j;
        k.adj[j] |= 1U << i;
    }
}

struct ChunkResult {
    std::uint64_t max = 0;
    std::vector<std::uint64_t> codes;
};

struct ShardResult {
    Count max = 0;
    std::set<std::string> codes;
    std::uint64_t scanned = 0;
};

std::uint64_t relabel_code(std::uint64_t code, const std::vector<std::pair<int, int>>& order, const std::vector<int>& perm,
                           const std::vector<std::vector<int>>& index) {
    std::uint64_t out = 0;
    for (std::uint64_t bits = code; bits; bits &= bits - 1) {
        auto [i, j] = order[static_cast<std::size_t>(std::countr_zero(bits))];
        out |= std::uint64_t{1} << index[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    }
    return out;
}

// Canonical forms of a batch of labelled codes; each new class marks its
// whole relabeling orbit so later members skip canonicalization.
std::set<std::string> canonical_classes(int n, const std::vector<std::uint64_t>& codes) {
    const auto order = edge_order(n);
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t b = 0; b < order.size(); ++b) {
        auto [i, j] = order[b];
        index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(b);
        index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(b);
    }
    std::set<std::string> classes;
    std::unordered_set<std::uint64_t> covered;
    for (std::uint64_t code : codes) {
        if (covered.count(code)) continue;
        classes.insert(canonical_code(graph_from_code(n, code)).code);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do covered.insert(relabel_code(code, order, perm, index));
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    return classes;
}

ShardResult scan_range(int n, Quantity q, std::uint64_t lo, std::uint64_t hi, unsigned threads) {
    const auto order = edge_order(n);
    constexpr std::uint64_t kChunk = 1 << 14;
    const std::uint64_t chunks = hi > lo ? (hi - lo + kChunk - 1) / kChunk : 0;
    std::vector<ChunkResult> partial(static_cast<std::size_t>(chunks));
    parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
        Kernel k{};
        ChunkResult& out = partial[c];
        const std::uint64_t from = lo + c * kChunk;
        const std::uint64_t to = std::min(hi, from + kChunk);
        for (std::uint64_t code = from; code < to; ++code) {
            load_kernel(k, n, order, code);
            std::uint64_t v = k.value(q);
            if (v > out.max) {
                out.max = v;
                out.codes.clear();
            }
            if (v == out.max) out.codes.push_back(code);
        }
    });
    ShardResult result;
    result.scanned = hi - lo;
    std::uint64_t best = 0;
    for (const auto& p : partial) best = std::max(best, p.max);
    std::vector<std::uint64_t> codes;
    for (const auto& p : partial)
        if (p.max == best) codes.insert(codes.end(), p.codes.begin(), p.codes.end());
    result.max = best;
    result.codes = canonical_classes(n, codes);
    return result;
}

std::filesystem::path checkpoint_path(const SweepOptions& o, int n, Quantity q) {
    return std::filesystem::path(o.checkpoint_dir) /
           ("sweep-n" + std::to_string(n) + "-" + to_string(q) + "-k" + std::to_string(o.shards) + ".txt");
}

std::map<int, ShardResult> read_checkpoints(const std::filesystem::path& path) {
    std::map<int, ShardResult> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string field;
        if (!std::getline(ss, field, ',')) continue;
        int shard = std::stoi(field);
        ShardResult r;
        std::getline(ss, field, ',');
        r.max = static_cast<Count>(std::stoull(field));
        while (std::getline(ss, field, ','))
            if (!field.empty()) r.codes.insert(field);
        out[shard] = std::move(r);
    }
    return out;
}

void audit(int n, Quantity q, std::uint64_t lo, std::uint64_t hi, int samples, int& passed) {
    if (hi <= lo) return;
    const auto order = edge_order(n);
    std::mt19937_64 rng(0x5eedULL * static_cast<unsigned>(n + 1) + static_cast<unsigned>(q));
    std::uniform_int_distribution<std::uint64_t> pick(lo, hi - 1);
    Kernel k{};
    for (int s = 0; s < samples; ++s) {
        const std::uint64_t code = pick(rng);
        Graph g = graph_from_code(n, code);
        load_kernel(k, n, order, code);
        if (static_cast<Count>(k.value(q)) != evaluate_quantity(g, q))
            throw std::logic_error("sweep kernel disagrees with the census engine on " + to_graph6(g));
        if (!(count_induced_cycles(g) == slow_census(g)))
            throw std::logic_error("census disagrees with the subset oracle on " + to_graph6(g));
        ++passed;
    }
}

}  // namespace

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    const auto order = edge_order(n);
    for (std::uint64_t bits = code; bits; bits &= bits - 1) edges.push_back(order[static_cast<std::size_t>(std::countr_zero(bits))]);
    return Graph::from_edge_list(n, edges);
}

Count evaluate_quantity(const Graph& g, Quantity q) {
    if (is_path_quantity(q)) return g.order() < 2 ? 0 : p2_max(g, parity_of(q)).value;
    CycleCensus c = count_induced_cycles(g);
    switch (q) {
        case Quantity::m_odd: return c.odd();
        case Quantity::m_even: return c.even();
        case Quantity::m_odd_holes: return c.odd_holes();
        default: return c.total();
    }
}

SweepResult exhaustive_max(int n, Quantity q, const SweepOptions& options) {
    if (n < 1) throw InputError("sweep needs n >= 1");
    if (n > 8) throw InputError("exhaustive sweep supports n <= 8, got " + std::to_string(n));
    if (n == 8 && !options.allow_long) throw InputError("n = 8 scans 2^28 graphs; pass the long-run flag to allow it");
    const std::uint64_t space = std::uint64_t{1} << pair_count(n);
    if (options.shards < 1 || static_cast<std::uint64_t>(options.shards) > space)
        throw InputError("shard count must lie in 1.." + std::to_string(space));
    if (options.shard && (*options.shard < 0 || *options.shard >= options.shards))
        throw InputError("shard index " + std::to_string(*options.shard) + " outside 0.." + std::to_string(options.shards - 1));

    const auto bounds = [&](int s) {
        return std::pair{space / static_cast<std::uint64_t>(options.shards) * static_cast<std::uint64_t>(s) +
                             std::min<std::uint64_t>(static_cast<std::uint64_t>(s), space % static_cast<std::uint64_t>(options.shards)),
                         space / static_cast<std::uint64_t>(options.shards) * static_cast<std::uint64_t>(s + 1) +
                             std::min<std::uint64_t>(static_cast<std::uint64_t>(s + 1), space % static_cast<std::uint64_t>(options.shards))};
    };

    std::map<int, ShardResult> done;
    std::filesystem::path ckpt;
    if (!options.checkpoint_dir.empty()) {
        std::filesystem::create_directories(options.checkpoint_dir);
        ckpt = checkpoint_path(options, n, q);
        done = read_checkpoints(ckpt);
    }

    SweepResult result;
    result.n = n;
    result.quantity = q;
    std::set<std::string> codes;
    for (int s = 0; s < options.shards; ++s) {
        if (options.shard && *options.shard != s) continue;
        auto [lo, hi] = bounds(s);
        ShardResult shard;
        if (auto it = done.find(s); it != done.end()) {
            shard = it->second;
            shard.scanned = hi - lo;
        } else {
            shard = scan_range(n, q, lo, hi, options.threads);
            if (!ckpt.empty()) {
                std::ofstream out(ckpt, std::ios::app);
                out << s << ',' << to_string(shard.max);
                for (const auto& c : shard.codes) out << ',' << c;
                out << '\n';
            }
        }
        audit(n, q, lo, hi, 10, result.audits);
        result.graphs_scanned += shard.scanned;
        if (shard.max > result.max) {
            result.max = shard.max;
            codes.clear();
        }
        if (shard.max == result.max) codes.insert(shard.codes.begin(), shard.codes.end());
    }
    // re-verify every reported class with the public engine
    for (const auto& c : codes)
        if (evaluate_quantity(parse_graph6(c), q) != result.max) throw std::logic_error("extremal code " + c + " does not reach the maximum");
    result.extremal_codes.assign(codes.begin(), codes.end());
    return result;
}

UniquenessReport verify_extremal_uniqueness(int n, const SweepOptions& options) {
    if (n < 4 || n > 7) throw InputError("extremal shape check supports 4 <= n <= 7, got " + std::to_string(n));
    SweepResult sweep = exhaustive_max(n, Quantity::p2, options);
    UniquenessReport report;
    report.n = n;
    report.max = sweep.max;
    std::set<std::vector<int>> multisets;
    for (const auto& code : sweep.extremal_codes) {
        Graph g = parse_graph6(code);
        ++report.graphs;
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                if (count_induced_st_paths(g, x, y).p2() != sweep.max) continue;
                ++report.pairs;
                auto family = classify_path_family(g, x, y, PathParity::all);
                if (!family) {
                    report.counterexamples.push_back(code + " " + std::to_string(x) + " " + std::to_string(y));
                    continue;
                }
                auto layers = layered_braid(g, x, y);
                std::vector<int> central(layers->clusters.size() - 2);
                for (std::size_t i = 1; i + 1 < layers->clusters.size(); ++i) central[i - 1] = static_cast<int>(layers->clusters[i].size());
                std::sort(central.begin(), central.end());
                multisets.insert(central);
            }
        }
    }
    report.central_multisets.assign(multisets.begin(), multisets.end());
    return report;
}

}  // namespace ic
