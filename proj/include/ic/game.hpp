#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ic/census.hpp"
#include "ic/graph.hpp"

namespace ic {

/// Position after u_1..u_i have been chosen.
struct GameState {
    std::vector<int> chosen;  // u_1..u_i, never empty
    VertexSet seen;           // N[u_1..u_{i-1}]

    int current() const { return chosen.back(); }
    static GameState start(int v) { return {{v}, {}}; }
};

/// Neighbours of the current vertex outside N[u_1..u_{i-1}]. For i = 1 the
/// excluded set is empty; u_1 is not its own neighbour, so it never
/// appears either way.
VertexSet legal_moves(const Graph& g, const GameState& state);

/// True iff the current vertex does not have exactly 3 legal moves.
bool is_bad(const Graph& g, const GameState& state);

/// The state after choosing u (which must be a legal move).
GameState advance(const Graph& g, const GameState& state, int u);

enum class Player { builder, adversary };
std::string to_string(Player p);

struct GameVerdict {
    Player winner = Player::builder;
    /// "bad-vertex-in-N4" or "unseen-vertex-at-termination" for Adversary wins.
    std::optional<std::string> reason;
    /// One optimal line u_1..u_k.
    std::vector<int> trace;
};

/// Exact minimax over the w-typical game from v. Requires w outside N^4[v];
/// otherwise throws InputError naming the distance.
GameVerdict solve_typical_game(const Graph& g, int v, int w);

struct AtypicalReport {
    std::vector<int> atypical;
    std::vector<int> typical;
    std::vector<int> exempt;  // N^4[v]
};

AtypicalReport atypical_set(const Graph& g, int v, const CensusOptions& options = {});

struct LocalStructure {
    std::vector<int> V;
    std::vector<int> Z;
    std::vector<int> W;
};

/// Disjoint 3-sets V, Z, W with z in Z such that N(v) & N(w) = Z for all
/// v in V and w in W, V | W <= N(z') <= V | W | Z for all z' in Z, and no
/// V-W edges. Z is searched in lexicographic order; V holds the smaller
/// endpoint of V | W.
std::optional<LocalStructure> local_structure(const Graph& g, int z);

}  // namespace ic
