#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "horse/model.hpp"

namespace horse {

// All simulation draws come from mt19937_64, whose output sequence is fixed
// by the standard, with uniforms built from the top 53 bits. Results are
// therefore bit-identical across platforms for a given seed.
using Rng = std::mt19937_64;

inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Uniform draw on [0,1) with 53-bit resolution.
inline double next_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct TurnResult {
  bool scored;      // the shooter scored the turn's first point
  int shots_taken;  // rounds the shooter initiated, always >= 1
};

// Plays one turn up to its first point: S1 ends it unscored, S2 scores and
// ends it, S3 restarts the shooter under Traditional and ends the turn under
// Pops. This is the Monte Carlo oracle for A and B.
TurnResult simulate_turn(RuleSet rules, ShotProbability p1, ShotProbability p2, Rng& rng);

// Distribution of points scored over a whole turn, where a scored point
// restarts the shooter under both rule sets. Entry k < max_points is
// P(exactly k points); the final entry is P(at least max_points).
// Entries sum to 1.
std::vector<double> turn_point_distribution(RuleSet rules, ShotProbability p1,
                                            ShotProbability p2, int max_points);

// Plays one full turn, counting points scored on the follower and stopping
// once cap points have been reached. Same round logic the game engines use.
int play_turn_points(RuleSet rules, ShotProbability shooter, ShotProbability follower,
                     int cap, Rng& rng);

enum class Player { One, Two };

inline Player opponent_of(Player p) {
  return p == Player::One ? Player::Two : Player::One;
}

inline int player_index(Player p) { return p == Player::One ? 0 : 1; }

// Make probabilities during one player's turn. The shooter picks the shot,
// so the pair can differ depending on who is shooting.
struct TurnProbs {
  ShotProbability shooter;
  ShotProbability follower;
};

struct GameConfig {
  RuleSet rules;
  TurnProbs when_one_shoots;  // shooter One, follower Two
  TurnProbs when_two_shoots;  // shooter Two, follower One
  int letters_to_lose = 5;    // H-O-R-S-E
  Player first_shooter = Player::One;
};

// Letter counts plus whose turn it is. Terminal once either count reaches
// letters_to_lose; that player has spelled the word and loses.
struct GameState {
  std::array<int, 2> letters{0, 0};
  Player shooter = Player::One;
};

// Exact probability that Player One wins, via backward solve over the
// absorbing chain on (letters_one, letters_two, shooter). Per-turn letter
// gains follow turn_point_distribution capped at the letters remaining.
double game_win_prob_exact(const GameConfig& cfg);

struct McEstimate {
  double estimate;
  double std_error;  // binomial sqrt(p(1-p)/n)
};

// Monte Carlo estimate of the same probability from n simulated games.
// Identical (cfg, n, seed) produces identical output.
McEstimate game_win_prob_mc(const GameConfig& cfg, std::int64_t n, std::uint64_t seed);

}  // namespace horse
