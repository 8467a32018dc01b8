#include "horse/simulate.hpp"

#include <cmath>
#include <string>

namespace horse {

namespace {

void check_config(const GameConfig& cfg) {
  if (cfg.letters_to_lose < 1) {
    throw DomainError("letters_to_lose must be at least 1, got " +
                      std::to_string(cfg.letters_to_lose));
  }
}

}  // namespace

TurnResult simulate_turn(RuleSet rules, ShotProbability p1, ShotProbability p2, Rng& rng) {
  const double make1 = p1.value();
  const double make2 = p2.value();
  TurnResult result{false, 0};
  for (;;) {
    ++result.shots_taken;
    if (next_unit(rng) >= make1) {
      return result;  // S1: shooter misses, turn over
    }
    if (next_unit(rng) >= make2) {
      result.scored = true;  // S2: opponent misses the made shot
      return result;
    }
    if (rules == RuleSet::Pops) {
      return result;  // S3 pops the turn over
    }
    // S3 under Traditional: the shooter restarts.
  }
}

std::vector<double> turn_point_distribution(RuleSet rules, ShotProbability p1,
                                            ShotProbability p2, int max_points) {
  if (max_points < 1) {
    throw DomainError("max_points must be at least 1, got " + std::to_string(max_points));
  }
  // A scored point restarts the shooter from a fresh round, so the point
  // count is geometric: P(at least k points) = rho^k with rho the
  // single-point scoring probability A or B.
  const double rho = score_prob(rules, p1, p2);
  std::vector<double> dist(static_cast<std::size_t>(max_points) + 1);
  double tail = 1.0;  // P(at least k points)
  for (int k = 0; k < max_points; ++k) {
    dist[static_cast<std::size_t>(k)] = tail * (1.0 - rho);
    tail *= rho;
  }
  dist[static_cast<std::size_t>(max_points)] = tail;
  return dist;
}

int play_turn_points(RuleSet rules, ShotProbability shooter, ShotProbability follower,
                     int cap, Rng& rng) {
  const double make_s = shooter.value();
  const double make_f = follower.value();
  int points = 0;
  while (points < cap) {
    if (next_unit(rng) >= make_s) {
      break;  // S1
    }
    if (next_unit(rng) >= make_f) {
      ++points;  // S2; shooter restarts
      continue;
    }
    if (rules == RuleSet::Pops) {
      break;  // S3
    }
  }
  return points;
}

double game_win_prob_exact(const GameConfig& cfg) {
  check_config(cfg);
  const int L = cfg.letters_to_lose;
  // win[l1][l2][s]: P(Player One wins) from letter counts (l1, l2) with
  // shooter s. Letters a turn adds always land on the shooter's opponent, so
  // l1 + l2 never decreases; solve from high letter totals down. Zero-point
  // turns just swap the shooter, giving a 2x2 system per (l1, l2).
  const auto at = [L](int l1, int l2, int s) {
    return static_cast<std::size_t>((l1 * L + l2) * 2 + s);
  };
  std::vector<double> win(static_cast<std::size_t>(L * L * 2), 0.0);

  for (int total = 2 * L - 2; total >= 0; --total) {
    for (int l1 = std::min(L - 1, total); l1 >= 0; --l1) {
      const int l2 = total - l1;
      if (l2 < 0 || l2 > L - 1) continue;

      const int need_two = L - l2;  // letters that finish Two off (One wins)
      const int need_one = L - l1;
      const std::vector<double> q_one = turn_point_distribution(
          cfg.rules, cfg.when_one_shoots.shooter, cfg.when_one_shoots.follower, need_two);
      const std::vector<double> q_two = turn_point_distribution(
          cfg.rules, cfg.when_two_shoots.shooter, cfg.when_two_shoots.follower, need_one);

      // One shoots: a = known mass, then + q_one[0] * win(Two shoots).
      double a = q_one[static_cast<std::size_t>(need_two)];  // Two spells the word
      for (int j = 1; j < need_two; ++j) {
        a += q_one[static_cast<std::size_t>(j)] * win[at(l1, l2 + j, 1)];
      }
      // Two shoots: j >= need_one means One loses, contributing zero.
      double b = 0.0;
      for (int j = 1; j < need_one; ++j) {
        b += q_two[static_cast<std::size_t>(j)] * win[at(l1 + j, l2, 0)];
      }

      const double w_one = (a + q_one[0] * b) / (1.0 - q_one[0] * q_two[0]);
      win[at(l1, l2, 0)] = w_one;
      win[at(l1, l2, 1)] = b + q_two[0] * w_one;
    }
  }
  return win[at(0, 0, player_index(cfg.first_shooter))];
}

McEstimate game_win_prob_mc(const GameConfig& cfg, std::int64_t n, std::uint64_t seed) {
  check_config(cfg);
  if (n < 1) {
    throw DomainError("number of simulated games must be at least 1, got " +
                      std::to_string(n));
  }
  Rng rng(seed);
  const int L = cfg.letters_to_lose;
  std::int64_t one_wins = 0;
  for (std::int64_t g = 0; g < n; ++g) {
    GameState state{{0, 0}, cfg.first_shooter};
    for (;;) {
      const bool one_shoots = state.shooter == Player::One;
      const TurnProbs& probs = one_shoots ? cfg.when_one_shoots : cfg.when_two_shoots;
      int& opp_letters = state.letters[static_cast<std::size_t>(
          player_index(opponent_of(state.shooter)))];
      opp_letters += play_turn_points(cfg.rules, probs.shooter, probs.follower,
                                      L - opp_letters, rng);
      if (opp_letters == L) {
        if (one_shoots) ++one_wins;  // Two spelled the word
        break;
      }
      state.shooter = opponent_of(state.shooter);
    }
  }
  const double estimate = static_cast<double>(one_wins) / static_cast<double>(n);
  return {estimate, std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(n))};
}

}  // namespace horse
