#include "ic/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ic/errors.hpp"

namespace ic {

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::H: return "H";
        case FamilyTag::G: return "G";
        case FamilyTag::E: return "E";
        case FamilyTag::F: return "F";
        case FamilyTag::F_odd: return "F_odd";
        case FamilyTag::F_even: return "F_even";
        case FamilyTag::G_script: return "G_script";
    }
    return "?";
}

FamilyTag parse_family_tag(const std::string& text) {
    if (text == "H") return FamilyTag::H;
    if (text == "G") return FamilyTag::G;
    if (text == "E") return FamilyTag::E;
    if (text == "F") return FamilyTag::F;
    if (text == "Fo" || text == "F_odd") return FamilyTag::F_odd;
    if (text == "Fe" || text == "F_even") return FamilyTag::F_even;
    if (text == "Gs" || text == "G_script") return FamilyTag::G_script;
    throw InputError("unknown family '" + text + "'");
}

BuiltBraid build_braid(const BraidSpec& spec) {
    const auto& sizes = spec.cluster_sizes;
    const int k = static_cast<int>(sizes.size());
    if (spec.cyclic && k < 3) throw InputError("cyclic braid needs at least 3 clusters, got " + std::to_string(k));
    if (!spec.cyclic && k < 2) throw InputError("braid needs at least 2 clusters, got " + std::to_string(k));
    if (!spec.intra.empty() && spec.intra.size() != 1 && static_cast<int>(spec.intra.size()) != k)
        throw InputError("intra patterns must number 0, 1 or one per cluster");
    int n = 0;
    for (int s : sizes) {
        if (s <= 0) throw InputError("cluster sizes must be positive");
        n += s;
        if (n > kMaxVertices) throw InputError("braid exceeds 128 vertices");
    }

    ClusterPartition part;
    part.cyclic = spec.cyclic;
    int next = 0;
    for (int s : sizes) {
        std::vector<int> c(static_cast<std::size_t>(s));
        for (int& v : c) v = next++;
        part.clusters.push_back(std::move(c));
    }

    std::vector<Edge> edges;
    auto join = [&](int a, int b) {
        for (int u : part.clusters[static_cast<std::size_t>(a)])
            for (int v : part.clusters[static_cast<std::size_t>(b)]) edges.emplace_back(u, v);
    };
    for (int i = 0; i + 1 < k; ++i) join(i, i + 1);
    if (spec.cyclic) join(k - 1, 0);

    for (int i = 0; i < k; ++i) {
        if (spec.intra.empty()) break;
        const IntraPattern& pat = spec.intra.size() == 1 ? spec.intra[0] : spec.intra[static_cast<std::size_t>(i)];
        const auto& c = part.clusters[static_cast<std::size_t>(i)];
        const int s = static_cast<int>(c.size());
        switch (pat.kind) {
            case IntraPattern::Kind::empty: break;
            case IntraPattern::Kind::full:
                for (int a = 0; a < s; ++a)
                    for (int b = a + 1; b < s; ++b) edges.emplace_back(c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(b)]);
                break;
            case IntraPattern::Kind::explicit_edges:
                for (auto [a, b] : pat.edges) {
                    if (a < 0 || b < 0 || a >= s || b >= s || a == b)
                        throw InputError("intra edge (" + std::to_string(a) + "," + std::to_string(b) + ") invalid for cluster " +
                                         std::to_string(i) + " of size " + std::to_string(s));
                    edges.emplace_back(c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(b)]);
                }
                break;
        }
    }
    return {Graph::from_edge_list(n, edges), std::move(part)};
}

namespace {

std::vector<int> with_threes(std::vector<int> special, int n) {
    int rest = n;
    for (int s : special) rest -= s;
    if (rest < 0 || rest % 3 != 0) throw std::logic_error("cluster budget mismatch");
    special.insert(special.end(), static_cast<std::size_t>(rest / 3), 3);
    return special;
}

void require_at_least(int n, int lo, const char* family) {
    if (n < lo) throw InputError(std::string(family) + " is defined here for n >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

}  // namespace

std::vector<int> H_cluster_sizes(int n) {
    require_at_least(n, 8, "H_n");
    switch (n % 3) {
        case 0: return with_threes({}, n);
        case 1: return with_threes({4}, n);
        default: return with_threes({2}, n);
    }
}

std::vector<int> G_cluster_sizes(int n) {
    require_at_least(n, 14, "G_n");
    switch (n % 6) {
        case 0: return with_threes({2, 2, 2}, n);
        case 1: return with_threes({2, 2}, n);
        case 2: return with_threes({2}, n);
        case 3: return with_threes({}, n);
        case 4: return with_threes({4}, n);
        default: return with_threes({4, 4}, n);
    }
}

std::vector<int> E_cluster_sizes(int n) {
    require_at_least(n, 14, "E_n");
    switch (n % 6) {
        case 0: return with_threes({}, n);
        case 1: return with_threes({4}, n);
        case 2: return with_threes({4, 4}, n);
        case 3: return with_threes({2, 2, 2}, n);
        case 4: return with_threes({2, 2}, n);
        default: return with_threes({2}, n);
    }
}

BuiltBraid build_H(int n) { return build_braid({H_cluster_sizes(n), true, {}}); }
BuiltBraid build_G(int n) { return build_braid({G_cluster_sizes(n), true, {IntraPattern::full()}}); }
BuiltBraid build_E(int n) { return build_braid({E_cluster_sizes(n), true, {}}); }

std::vector<std::vector<int>> F_central_multisets(int n, PathParity parity) {
    std::vector<std::vector<int>> specials;
    switch (parity) {
        case PathParity::all:
            require_at_least(n, 4, "F_n");
            switch (n % 3) {
                case 0: specials = {{4}, {2, 2}}; break;
                case 1: specials = {{2}}; break;
                default: specials = {{}}; break;
            }
            break;
        case PathParity::odd:
            require_at_least(n, 10, "odd path family");
            switch (n % 6) {
                case 0: specials = {{4}}; break;
                case 1: specials = {{4, 4}, {2, 2, 2, 2}}; break;
                case 2: specials = {{2, 2, 2}}; break;
                case 3: specials = {{2, 2}}; break;
                case 4: specials = {{2}}; break;
                default: specials = {{}}; break;
            }
            break;
        case PathParity::even:
            require_at_least(n, 10, "even path family");
            switch (n % 6) {
                case 0: specials = {{2, 2}}; break;
                case 1: specials = {{2}}; break;
                case 2: specials = {{}}; break;
                case 3: specials = {{4}}; break;
                case 4: specials = {{4, 4}, {2, 2, 2, 2}}; break;
                default: specials = {{2, 2, 2}}; break;
            }
            break;
    }
    std::vector<std::vector<int>> out;
    for (auto& s : specials) {
        auto m = with_threes(s, n - 2);
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<int>> F_central_sequences(int n, PathParity parity) {
    std::vector<std::vector<int>> out;
    for (auto seq : F_central_multisets(n, parity)) {
        do out.push_back(seq);
        while (std::next_permutation(seq.begin(), seq.end()));
    }
    return out;
}

BuiltBraid member_of_F(int n, PathParity parity, int variant, const IntraPattern& intra) {
    auto seqs = F_central_sequences(n, parity);
    if (variant < 0 || variant >= static_cast<int>(seqs.size()))
        throw InputError("variant " + std::to_string(variant) + " outside 0.." + std::to_string(seqs.size() - 1));
    BraidSpec spec;
    spec.cluster_sizes.push_back(1);
    const auto& central = seqs[static_cast<std::size_t>(variant)];
    spec.cluster_sizes.insert(spec.cluster_sizes.end(), central.begin(), central.end());
    spec.cluster_sizes.push_back(1);
    spec.intra.assign(spec.cluster_sizes.size(), intra);
    spec.intra.front() = IntraPattern::empty();
    spec.intra.back() = IntraPattern::empty();
    return build_braid(spec);
}

namespace {

// Smallest rotation/reflection of a cyclic sequence.
std::vector<int> bracelet_form(const std::vector<int>& seq) {
    std::vector<int> best = seq;
    std::vector<int> cur = seq;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < cur.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            best = std::min(best, cur);
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

}  // namespace

void members_of_script_G(int n, const std::function<void(const BuiltBraid&)>& visit) {
    require_at_least(n, 14, "script-G family");
    std::vector<std::vector<int>> multisets{G_cluster_sizes(n)};
    if (n % 6 == 5) multisets.push_back(with_threes({2, 2, 2, 2}, n));
    for (auto m : multisets) {
        std::sort(m.begin(), m.end());
        std::set<std::vector<int>> seen;
        do {
            auto form = bracelet_form(m);
            if (!seen.insert(form).second) continue;
            for (auto pat : {IntraPattern::empty(), IntraPattern::full()}) visit(build_braid({form, true, {pat}}));
        } while (std::next_permutation(m.begin(), m.end()));
    }
}

std::vector<BuiltBraid> members_of_script_G(int n) {
    std::vector<BuiltBraid> out;
    members_of_script_G(n, [&](const BuiltBraid& b) { out.push_back(b); });
    return out;
}

BuiltBraid build_family(const FamilyId& id, const IntraPattern& intra) {
    switch (id.tag) {
        case FamilyTag::H: return build_H(id.n);
        case FamilyTag::G: return build_G(id.n);
        case FamilyTag::E: return build_E(id.n);
        case FamilyTag::F: return member_of_F(id.n, PathParity::all, id.variant, intra);
        case FamilyTag::F_odd: return member_of_F(id.n, PathParity::odd, id.variant, intra);
        case FamilyTag::F_even: return member_of_F(id.n, PathParity::even, id.variant, intra);
        case FamilyTag::G_script: {
            auto all = members_of_script_G(id.n);
            if (id.variant < 0 || id.variant >= static_cast<int>(all.size()))
                throw InputError("variant " + std::to_string(id.variant) + " outside 0.." + std::to_string(all.size() - 1));
            return all[static_cast<std::size_t>(id.variant)];
        }
    }
    throw InputError("unknown family");
}

}  // namespace ic
