#include "ic/recognition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "ic/errors.hpp"

namespace ic {

std::string to_string(IntraKind kind) {
    switch (kind) {
        case IntraKind::empty: return "empty";
        case IntraKind::full: return "full";
        case IntraKind::mixed: return "mixed";
    }
    return "?";
}

std::string BraidWitness::describe() const {
    std::string what = condition == Condition::missing_neighbor ? "missing-neighbor-cluster" : "outside-neighbor";
    return "vertex " + std::to_string(vertex) + " in cluster " + std::to_string(cluster) + ": " + what + " (vertex " +
           std::to_string(other) + ")";
}

namespace {

using Clusters = std::vector<std::vector<int>>;

void validate(const Graph& g, const ClusterPartition& p) {
    const int k = p.length();
    if (p.cyclic && k < 3) throw InputError("cyclic partition needs at least 3 clusters, got " + std::to_string(k));
    if (!p.cyclic && k < 2) throw InputError("partition needs at least 2 clusters, got " + std::to_string(k));
    VertexSet seen;
    for (int i = 0; i < k; ++i) {
        const auto& c = p.clusters[static_cast<std::size_t>(i)];
        if (c.empty()) throw InputError("cluster " + std::to_string(i) + " is empty");
        for (int v : c) {
            if (v < 0 || v >= g.order()) throw InputError("cluster " + std::to_string(i) + " names vertex " + std::to_string(v) + " outside the graph");
            if (seen.contains(v)) throw InputError("vertex " + std::to_string(v) + " appears in two clusters");
            seen.insert(v);
        }
    }
}

int inner_edges(const Graph& g, const VertexSet& c) {
    int twice = 0;
    c.for_each([&](int v) { twice += (g.neighbors(v) & c).size(); });
    return twice / 2;
}

bool is_empty_cluster(const Graph& g, const VertexSet& c) { return inner_edges(g, c) == 0; }

bool is_full_cluster(const Graph& g, const VertexSet& c) {
    const int s = c.size();
    return inner_edges(g, c) == s * (s - 1) / 2;
}

IntraKind intra_kind(const Graph& g, const VertexSet& c) {
    if (is_empty_cluster(g, c)) return IntraKind::empty;
    if (is_full_cluster(g, c)) return IntraKind::full;
    return IntraKind::mixed;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Non-3 clusters form one run in cyclic order.
bool specials_contiguous(const std::vector<int>& sizes) {
    const std::size_t k = sizes.size();
    int starts = 0;
    for (std::size_t i = 0; i < k; ++i) {
        bool here = sizes[i] != 3;
        bool before = sizes[(i + k - 1) % k] != 3;
        if (here && !before) ++starts;
    }
    return starts <= 1;
}

std::vector<FamilyTag> cyclic_tags(const Graph& g, const ClusterPartition& p) {
    std::vector<FamilyTag> tags;
    const int n = g.order();
    if (p.covered() != g.vertices()) return tags;
    const auto sizes = p.sizes();
    const auto multiset = sorted(sizes);
    bool all_empty = true;
    bool all_full = true;
    for (int i = 0; i < p.length(); ++i) {
        VertexSet c = p.cluster_set(i);
        all_empty = all_empty && is_empty_cluster(g, c);
        all_full = all_full && is_full_cluster(g, c);
    }
    if (n >= 8 && all_empty && multiset == sorted(H_cluster_sizes(n))) tags.push_back(FamilyTag::H);
    if (n >= 14) {
        const bool g_sizes = multiset == sorted(G_cluster_sizes(n));
        if (all_full && g_sizes && specials_contiguous(sizes)) tags.push_back(FamilyTag::G);
        if (all_empty && multiset == sorted(E_cluster_sizes(n)) && specials_contiguous(sizes)) tags.push_back(FamilyTag::E);
        bool script = g_sizes;
        if (n % 6 == 5) {
            std::vector<int> four_twos(4, 2);
            four_twos.insert(four_twos.end(), static_cast<std::size_t>((n - 8) / 3), 3);
            script = script || multiset == four_twos;
        }
        if (script) tags.push_back(FamilyTag::G_script);
    }
    return tags;
}

std::vector<std::pair<FamilyTag, int>> path_tags(const Graph& g, const ClusterPartition& p) {
    std::vector<std::pair<FamilyTag, int>> tags;
    const int n = g.order();
    const int k = p.length();
    if (p.cyclic || k < 3 || p.covered() != g.vertices()) return tags;
    if (p.clusters.front().size() != 1 || p.clusters.back().size() != 1) return tags;
    std::vector<int> central;
    for (int i = 1; i + 1 < k; ++i) central.push_back(static_cast<int>(p.clusters[static_cast<std::size_t>(i)].size()));
    const std::pair<FamilyTag, PathParity> kinds[] = {
        {FamilyTag::F, PathParity::all}, {FamilyTag::F_odd, PathParity::odd}, {FamilyTag::F_even, PathParity::even}};
    for (auto [tag, parity] : kinds) {
        if (n < (parity == PathParity::all ? 4 : 10)) continue;
        auto seqs = F_central_sequences(n, parity);
        auto it = std::find(seqs.begin(), seqs.end(), central);
        if (it != seqs.end()) tags.emplace_back(tag, static_cast<int>(it - seqs.begin()));
    }
    return tags;
}

// Cluster-sequence check shared by verify_braid and the discovery search.
std::optional<BraidWitness> sandwich_violation(const Graph& g, const std::vector<VertexSet>& sets, bool cyclic) {
    const int k = static_cast<int>(sets.size());
    const int lo = cyclic ? 0 : 1;
    const int hi = cyclic ? k : k - 1;
    for (int i = lo; i < hi; ++i) {
        const VertexSet& prev = sets[static_cast<std::size_t>((i + k - 1) % k)];
        const VertexSet& next = sets[static_cast<std::size_t>((i + 1) % k)];
        const VertexSet required = prev | next;
        const VertexSet window = required | sets[static_cast<std::size_t>(i)];
        std::optional<BraidWitness> found;
        sets[static_cast<std::size_t>(i)].for_each([&](int x) {
            if (found) return;
            VertexSet missing = required - g.neighbors(x);
            if (!missing.empty()) {
                found = BraidWitness{x, i, BraidWitness::Condition::missing_neighbor, missing.first()};
                return;
            }
            VertexSet extra = g.neighbors(x) - window;
            if (!extra.empty()) found = BraidWitness{x, i, BraidWitness::Condition::outside_neighbor, extra.first()};
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<VertexSet> as_sets(const ClusterPartition& p) {
    std::vector<VertexSet> out;
    out.reserve(p.clusters.size());
    for (const auto& c : p.clusters) out.push_back(VertexSet::of(c));
    return out;
}

}  // namespace

RecognitionReport verify_braid(const Graph& g, const ClusterPartition& p) {
    validate(g, p);
    RecognitionReport report;
    report.partition = p;
    report.cluster_sizes = p.sizes();
    auto sets = as_sets(p);
    for (const auto& s : sets) report.intra.push_back(intra_kind(g, s));
    // witnesses are reported in listed vertex order, so re-walk the lists
    const int k = p.length();
    const int lo = p.cyclic ? 0 : 1;
    const int hi = p.cyclic ? k : k - 1;
    for (int i = lo; i < hi && !report.witness; ++i) {
        const VertexSet required = sets[static_cast<std::size_t>((i + k - 1) % k)] | sets[static_cast<std::size_t>((i + 1) % k)];
        const VertexSet window = required | sets[static_cast<std::size_t>(i)];
        for (int x : p.clusters[static_cast<std::size_t>(i)]) {
            VertexSet missing = required - g.neighbors(x);
            if (!missing.empty()) {
                report.witness = BraidWitness{x, i, BraidWitness::Condition::missing_neighbor, missing.first()};
                break;
            }
            VertexSet extra = g.neighbors(x) - window;
            if (!extra.empty()) {
                report.witness = BraidWitness{x, i, BraidWitness::Condition::outside_neighbor, extra.first()};
                break;
            }
        }
    }
    report.verified = !report.witness;
    if (!report.verified) return report;

    if (p.cyclic) {
        report.matching = cyclic_tags(g, p);
        if (!report.matching.empty()) report.family = FamilyId{report.matching.front(), g.order(), 0};
    } else {
        for (auto [tag, variant] : path_tags(g, p)) {
            report.matching.push_back(tag);
            if (!report.family) report.family = FamilyId{tag, g.order(), variant};
        }
    }
    return report;
}

namespace {

template <class F>
void for_each_subset(const std::vector<int>& pool, int max_size, F&& f) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!chosen.empty()) f(chosen);
        if (static_cast<int>(chosen.size()) == max_size) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

Clusters canonical_clusters(const std::vector<VertexSet>& sets) {
    Clusters out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.to_vector());
    if (out.size() >= 3 && out[1].front() > out.back().front()) std::reverse(out.begin() + 1, out.end());
    return out;
}

std::set<Clusters> search_cyclic(const Graph& g) {
    std::set<Clusters> found;
    const int n = g.order();
    if (n < 3 || !g.is_connected()) return found;
    const int max_size = n > 12 ? 4 : n;
    const VertexSet all = g.vertices();
    const VertexSet b0_seed = VertexSet::single(0);

    for_each_subset(g.neighbors(0).to_vector(), max_size, [&](const std::vector<int>& b1_list) {
        VertexSet b1 = VertexSet::of(b1_list);
        VertexSet common = all;
        b1.for_each([&](int b) { common &= g.neighbors(b); });
        common -= b1;
        common -= b0_seed;
        auto extend = [&](const VertexSet& b0) {
            std::vector<VertexSet> seq{b0, b1};
            VertexSet used = b0 | b1;
            for (;;) {
                const VertexSet& prev = seq[seq.size() - 2];
                const VertexSet& cur = seq.back();
                VertexSet next = g.neighbors(cur.first()) - prev - cur;
                if (next.empty()) return;
                if (next == b0 && seq.size() >= 3) break;
                if (next.intersects(used) || next.size() > max_size) return;
                seq.push_back(next);
                used |= next;
            }
            if (used != all) return;
            if (sandwich_violation(g, seq, true)) return;
            found.insert(canonical_clusters(seq));
        };
        extend(b0_seed);
        for_each_subset(common.to_vector(), max_size - 1, [&](const std::vector<int>& rest) { extend(b0_seed | VertexSet::of(rest)); });
    });
    return found;
}

long long balance_key(const Clusters& c) {
    long long sq = 0;
    for (const auto& x : c) sq += static_cast<long long>(x.size() * x.size());
    return sq;
}

}  // namespace

std::vector<ClusterPartition> all_cyclic_braid_partitions(const Graph& g) {
    std::vector<ClusterPartition> out;
    for (auto& c : search_cyclic(g)) out.push_back({c, true});
    return out;
}

std::optional<ClusterPartition> discover_cyclic_braid(const Graph& g) {
    auto found = search_cyclic(g);
    if (found.empty()) return std::nullopt;
    const Clusters* best = nullptr;
    for (const auto& c : found) {
        if (!best) {
            best = &c;
            continue;
        }
        if (c.size() != best->size()) {
            if (c.size() > best->size()) best = &c;
            continue;
        }
        long long a = balance_key(c);
        long long b = balance_key(*best);
        if (a < b) best = &c;
        // equal keys: the set is ordered, so the first seen is smallest
    }
    return ClusterPartition{*best, true};
}

std::vector<FamilyTag> matching_families(const Graph& g) {
    std::set<FamilyTag> tags;
    for (const auto& c : search_cyclic(g)) {
        ClusterPartition p{c, true};
        for (FamilyTag t : cyclic_tags(g, p)) tags.insert(t);
    }
    std::vector<FamilyTag> out;
    for (FamilyTag t : {FamilyTag::H, FamilyTag::G, FamilyTag::E, FamilyTag::G_script})
        if (tags.count(t)) out.push_back(t);
    return out;
}

std::optional<FamilyId> classify_family(const Graph& g) {
    auto tags = matching_families(g);
    if (tags.empty()) return std::nullopt;
    return FamilyId{tags.front(), g.order(), 0};
}

std::optional<ClusterPartition> layered_braid(const Graph& g, int x, int y) {
    const int n = g.order();
    if (x < 0 || y < 0 || x >= n || y >= n) throw InputError("path endpoints outside the graph");
    if (x == y) throw InputError("path endpoints must differ");
    ClusterPartition p;
    VertexSet reached = VertexSet::single(x);
    VertexSet layer = reached;
    while (!layer.empty()) {
        p.clusters.push_back(layer.to_vector());
        if (layer.contains(y)) break;
        layer = g.neighbors(layer) - reached;
        reached |= layer;
    }
    if (p.clusters.back() != std::vector<int>{y}) return std::nullopt;
    if (reached != g.vertices()) return std::nullopt;
    if (sandwich_violation(g, as_sets(p), false)) return std::nullopt;
    return p;
}

std::optional<FamilyId> classify_path_family(const Graph& g, int x, int y, PathParity parity) {
    auto p = layered_braid(g, x, y);
    if (!p) return std::nullopt;
    const FamilyTag want = parity == PathParity::all ? FamilyTag::F : parity == PathParity::odd ? FamilyTag::F_odd : FamilyTag::F_even;
    for (auto [tag, variant] : path_tags(g, *p))
        if (tag == want) return FamilyId{tag, g.order(), variant};
    return std::nullopt;
}

namespace {

using Seq = std::vector<VertexSet>;

// Next cluster beyond `end` (coming from `inner`), if `end` can be made central.
std::optional<VertexSet> grow(const Graph& g, const VertexSet& end, const VertexSet& inner, const VertexSet& used) {
    std::optional<VertexSet> next;
    bool ok = true;
    end.for_each([&](int e) {
        if (!ok) return;
        VertexSet cand = g.neighbors(e) - end - inner;
        if (!inner.is_subset_of(g.neighbors(e)) || cand.size() != 3 || cand.intersects(used) || (next && *next != cand)) {
            ok = false;
            return;
        }
        next = cand;
    });
    if (!ok) return std::nullopt;
    return next;
}

Clusters to_clusters(const Seq& s) {
    Clusters out;
    for (const auto& c : s) out.push_back(c.to_vector());
    return out;
}

}  // namespace

std::vector<ClusterPartition> maximal_3braids(const Graph& g) {
    const int n = g.order();
    // key: (vertex set, length) -> smallest orientation seen
    std::map<std::pair<VertexSet, std::size_t>, Clusters> groups;

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                VertexSet center = VertexSet::of(std::array{a, b, c});
                VertexSet flank = g.neighbors(a) - center;
                if (flank.size() != 6) continue;
                if (g.neighbors(b) - center != flank || g.neighbors(c) - center != flank) continue;
                auto f = flank.to_vector();
                for (std::size_t i = 1; i < f.size(); ++i) {
                    for (std::size_t j = i + 1; j < f.size(); ++j) {
                        VertexSet left = VertexSet::of(std::array{f[0], f[i], f[j]});
                        VertexSet right = flank - left;
                        Seq seq{left, center, right};
                        VertexSet used = flank | center;
                        while (auto next = grow(g, seq.back(), seq[seq.size() - 2], used)) {
                            used |= *next;
                            seq.push_back(*next);
                        }
                        while (auto next = grow(g, seq.front(), seq[1], used)) {
                            used |= *next;
                            seq.insert(seq.begin(), *next);
                        }
                        Clusters fwd = to_clusters(seq);
                        Clusters rev(fwd.rbegin(), fwd.rend());
                        Clusters form = std::min(fwd, rev);
                        auto key = std::make_pair(used, seq.size());
                        auto it = groups.find(key);
                        if (it == groups.end()) groups.emplace(key, std::move(form));
                        else if (form < it->second) it->second = std::move(form);
                    }
                }
            }
        }
    }

    std::vector<ClusterPartition> out;
    for (const auto& [key, form] : groups) {
        bool dominated = false;
        for (const auto& [other, unused] : groups) {
            (void)unused;
            if (other.second > key.second && key.first.is_subset_of(other.first)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back({form, false});
    }
    std::sort(out.begin(), out.end(), [](const ClusterPartition& l, const ClusterPartition& r) { return l.clusters < r.clusters; });
    return out;
}

}  // namespace ic
