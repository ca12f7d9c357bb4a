#include "ic/game.hpp"

#include <string>
#include <unordered_map>

#include "ic/errors.hpp"
#include "ic/parallel.hpp"

namespace ic {

VertexSet legal_moves(const Graph& g, const GameState& state) { return g.neighbors(state.current()) - state.seen; }

bool is_bad(const Graph& g, const GameState& state) { return legal_moves(g, state).size() != 3; }

GameState advance(const Graph& g, const GameState& state, int u) {
    if (!legal_moves(g, state).contains(u)) throw InputError("vertex " + std::to_string(u) + " is not a legal move");
    GameState next = state;
    next.seen |= g.closed_neighbors(state.current());
    next.chosen.push_back(u);
    return next;
}

std::string to_string(Player p) { return p == Player::builder ? "Builder" : "Adversary"; }

namespace {

constexpr const char* kBadVertex = "bad-vertex-in-N4";
constexpr const char* kUnseen = "unseen-vertex-at-termination";

struct Key {
    VertexSet seen;
    int current;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = VertexSetHash{}(k.seen);
        return h ^ (static_cast<std::size_t>(k.current) * 0x9e3779b97f4a7c15ULL);
    }
};

class Solver {
public:
    Solver(const Graph& g, int w) : g_(g), zone_(ball(g, w, 4)) {}

    // Outcome from the position where `current` was just chosen and
    // `seen` = N[earlier choices]. Returns the Adversary reason, or
    // nullptr when Builder wins.
    const char* outcome(const VertexSet& seen, int current) {
        Key key{seen, current};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const char* result = evaluate(seen, current);
        memo_.emplace(key, result);
        return result;
    }

    GameVerdict verdict(int v) {
        GameVerdict out;
        VertexSet seen;
        int current = v;
        const char* result = outcome(seen, v);
        out.winner = result ? Player::adversary : Player::builder;
        if (result) out.reason = result;
        out.trace.push_back(v);
        // replay: follow a move whose outcome carries the same reason
        for (;;) {
            VertexSet moves = g_.neighbors(current) - seen;
            const bool bad = moves.size() != 3;
            if ((bad && zone_.contains(current)) || moves.empty()) break;
            VertexSet next_seen = seen | g_.closed_neighbors(current);
            int pick = -1;
            moves.for_each([&](int z) {
                if (pick >= 0) return;
                if (outcome(next_seen, z) == result) pick = z;
            });
            if (pick < 0) throw std::logic_error("typical-game trace lost the solved outcome");
            seen = next_seen;
            current = pick;
            out.trace.push_back(current);
        }
        return out;
    }

private:
    const char* evaluate(const VertexSet& seen, int current) {
        VertexSet moves = g_.neighbors(current) - seen;
        const bool in_zone = zone_.contains(current);
        if (in_zone && moves.size() != 3) return kBadVertex;
        if (moves.empty()) return zone_.is_subset_of(seen | g_.closed_neighbors(current)) ? nullptr : kUnseen;
        VertexSet next_seen = seen | g_.closed_neighbors(current);
        const bool adversary_moves = in_zone;
        const char* result = nullptr;
        bool decided = false;
        moves.for_each([&](int z) {
            if (decided) return;
            const char* sub = outcome(next_seen, z);
            if (adversary_moves && sub) {
                result = sub;
                decided = true;
            } else if (!adversary_moves && !sub) {
                result = nullptr;
                decided = true;
            } else if (!adversary_moves) {
                result = sub;  // every Builder move loses so far; keep one reason
            }
        });
        return result;
    }

    const Graph& g_;
    VertexSet zone_;
    std::unordered_map<Key, const char*, KeyHash> memo_;
};

void check_vertex(const Graph& g, int v, const char* name) {
    if (v < 0 || v >= g.order())
        throw InputError(std::string(name) + " = " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
}

}  // namespace

GameVerdict solve_typical_game(const Graph& g, int v, int w) {
    check_vertex(g, v, "v");
    check_vertex(g, w, "w");
    if (ball(g, v, 4).contains(w))
        throw InputError("w must lie outside N^4[v]; distance(v, w) = " + std::to_string(distance(g, v, w)));
    Solver solver(g, w);
    return solver.verdict(v);
}

AtypicalReport atypical_set(const Graph& g, int v, const CensusOptions& options) {
    check_vertex(g, v, "v");
    const VertexSet near = ball(g, v, 4);
    AtypicalReport report;
    report.exempt = near.to_vector();
    auto targets = (g.vertices() - near).to_vector();
    std::vector<char> builder_wins(targets.size());
    parallel_for(targets.size(), options.threads, [&](std::size_t i) {
        Solver solver(g, targets[i]);
        builder_wins[i] = solver.outcome(VertexSet{}, v) == nullptr;
    });
    for (std::size_t i = 0; i < targets.size(); ++i) (builder_wins[i] ? report.typical : report.atypical).push_back(targets[i]);
    return report;
}

std::optional<LocalStructure> local_structure(const Graph& g, int z) {
    check_vertex(g, z, "z");
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (a == z || b == z) continue;
            VertexSet Z = VertexSet::single(z) | VertexSet::single(a) | VertexSet::single(b);
            VertexSet outside = g.neighbors(z) - Z;
            if (outside.size() != 6) continue;
            if (g.neighbors(a) - Z != outside || g.neighbors(b) - Z != outside) continue;
            auto s = outside.to_vector();
            for (std::size_t i = 1; i < s.size(); ++i) {
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    VertexSet V = VertexSet::of(std::vector{s[0], s[i], s[j]});
                    VertexSet W = outside - V;
                    if (g.neighbors(V).intersects(W)) continue;
                    bool ok = true;
                    V.for_each([&](int x) {
                        W.for_each([&](int y) { ok = ok && (g.neighbors(x) & g.neighbors(y)) == Z; });
                    });
                    if (ok) return LocalStructure{V.to_vector(), Z.to_vector(), W.to_vector()};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace ic
