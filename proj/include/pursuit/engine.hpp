#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class TurnOrder { robber_then_cops, cops_then_robber };

const char* turn_order_name(TurnOrder t);
TurnOrder turn_order_from_name(const std::string& name);

struct GameRules {
    TurnOrder turn_order = TurnOrder::robber_then_cops;
    bool robber_may_pass = false;
    bool cops_may_pass = true;  // always true; kept for the record format
    int max_rounds = 1000;
};

struct RobberMove {
    bool pass = false;
    int to = -1;
    Elem generator = -1;  // the s realizing the edge; -1 on plain graphs / pass
};

struct MoveRecord {
    int from = -1;
    int to = -1;
    bool pass = false;
    Elem generator = -1;
};

/// Per-cop strategy annotation attached to a round record.
struct CopAnnotation {
    Elem label = -1;
    int rule_case = 0;  // 1..4, 0 when the policy has no rule table
    int tail = -1;
    int power = -1;  // -1 when undefined (tail > 0)
    Elem connection = -1;
};

struct RoundRecord {
    int round = 0;
    std::optional<MoveRecord> robber;
    std::vector<MoveRecord> cops;
    std::vector<CopAnnotation> notes;  // empty or one per cop
    bool captured = false;
    int captured_by = -1;  // cop index, or -1 when the robber stepped onto a cop
};

struct GameState {
    const AlgebraicGraph* graph = nullptr;
    GameRules rules;
    std::vector<int> cops;
    int robber = -1;
    int round = 0;
    bool captured = false;
    bool cops_placed = false;
    bool robber_placed = false;

    bool placements_done() const { return cops_placed && robber_placed; }
    bool finished() const { return captured || round >= rules.max_rounds; }
};

struct GameTrace {
    GameRules rules;
    std::string instance;       // graph description
    std::string instance_hash;  // provenance
    std::uint64_t seed = 0;
    std::string robber_policy, cop_policy;
    std::vector<int> initial_cops;
    int initial_robber = -1;
    bool captured_at_placement = false;
    std::vector<RoundRecord> rounds;
    bool captured = false;
    int capture_round = -1;  // 0 = at placement

    int total_rounds() const { return static_cast<int>(rounds.size()); }
    std::string to_lines() const;
    std::string to_json() const;
    static GameTrace from_lines(const std::string& text);
};

class RobberPolicy {
public:
    virtual ~RobberPolicy() = default;
    virtual std::string name() const = 0;
    virtual int place(const GameState& state) = 0;
    virtual RobberMove decide(const GameState& state) = 0;
};

struct CopResponse {
    std::vector<MoveRecord> moves;
    std::vector<CopAnnotation> notes;
};

class CopPolicy {
public:
    virtual ~CopPolicy() = default;
    virtual std::string name() const = 0;
    virtual std::vector<int> place(const GameState& state) = 0;
    /// robber_move is absent under cops-then-robber order.
    virtual CopResponse respond(const GameState& state, const std::optional<RobberMove>& robber_move) = 0;
    /// Deterministic policies expose a snapshot key so adversarial search can
    /// memoize against them; positions/round parity are appended by the caller.
    virtual std::optional<std::vector<std::int32_t>> state_key() const { return std::nullopt; }
    virtual std::unique_ptr<CopPolicy> clone() const = 0;
};

GameState new_game(const AlgebraicGraph& graph, int cop_count, GameRules rules);
void place_cops(GameState& state, const std::vector<int>& positions);
void place_robber(GameState& state, int position);

/// One full round in rule order; capture is checked after each sub-turn.
RoundRecord step_round(GameState& state, RobberPolicy& robber, CopPolicy& cops);

GameTrace run(const AlgebraicGraph& graph, int cop_count, GameRules rules, RobberPolicy& robber,
              CopPolicy& cops, std::uint64_t seed = 0);

/// Re-executes a trace move by move, validating every edge; returns the final
/// state. Used by tests to confirm traces replay deterministically.
GameState replay(const GameTrace& trace, const AlgebraicGraph& graph);

// --- provided policies ---------------------------------------------------

class ScriptedRobber : public RobberPolicy {
public:
    ScriptedRobber(int start, std::vector<RobberMove> moves);
    std::string name() const override { return "scripted"; }
    int place(const GameState&) override { return start_; }
    RobberMove decide(const GameState&) override;

private:
    int start_;
    std::vector<RobberMove> moves_;
    std::size_t next_ = 0;
};

class RandomRobber : public RobberPolicy {
public:
    explicit RandomRobber(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "uniform-random"; }
    int place(const GameState& state) override;
    RobberMove decide(const GameState& state) override;
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

/// Maximizes the minimum BFS distance to the cops; ties broken by lowest
/// target index, then lowest generator.
class GreedyMaxDistanceRobber : public RobberPolicy {
public:
    std::string name() const override { return "greedy-max-distance"; }
    int place(const GameState& state) override;
    RobberMove decide(const GameState& state) override;
};

/// Each cop walks a shortest path to the robber; used as a baseline opponent.
class GreedyCops : public CopPolicy {
public:
    std::string name() const override { return "greedy-chase"; }
    std::vector<int> place(const GameState& state) override;
    CopResponse respond(const GameState& state, const std::optional<RobberMove>&) override;
    std::optional<std::vector<std::int32_t>> state_key() const override { return std::vector<std::int32_t>{}; }
    std::unique_ptr<CopPolicy> clone() const override { return std::make_unique<GreedyCops>(*this); }
};

class ScriptedCops : public CopPolicy {
public:
    ScriptedCops(std::vector<int> start, std::vector<std::vector<MoveRecord>> blocks);
    std::string name() const override { return "scripted"; }
    std::vector<int> place(const GameState&) override { return start_; }
    CopResponse respond(const GameState&, const std::optional<RobberMove>&) override;
    std::unique_ptr<CopPolicy> clone() const override { return std::make_unique<ScriptedCops>(*this); }

private:
    std::vector<int> start_;
    std::vector<std::vector<MoveRecord>> blocks_;
    std::size_t next_ = 0;
};

/// Exhaustive adversarial robber: explores every legal robber line against a
/// deterministic cop policy (which must expose state_key), maximizing the
/// capture round; a reachable repeated state means the robber evades forever.
class AdversarialRobber : public RobberPolicy {
public:
    struct Analysis {
        bool evades = false;                    // some placement evades forever
        int worst_capture_round = -1;           // max over placements (when all captured)
        std::vector<int> capture_round_by_start;  // -1 = evades from that start
        std::uint64_t states_explored = 0;
    };

    AdversarialRobber(const AlgebraicGraph& graph, int cop_count, GameRules rules,
                      const CopPolicy& cop_policy, std::uint64_t max_states = 4'000'000);

    std::string name() const override { return "exhaustive-adversarial"; }
    int place(const GameState& state) override;
    RobberMove decide(const GameState& state) override;
    const Analysis& analysis() const { return analysis_; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    Analysis analysis_;
};

/// Legal robber options from a vertex: one entry per (target, generator) pair,
/// plus a pass entry when the rules allow it.
std::vector<RobberMove> legal_robber_moves(const AlgebraicGraph& graph, const GameRules& rules, int from);

}  // namespace pursuit
