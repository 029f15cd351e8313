// Copyright 2026 The nfgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NFGT_GAME_H_
#define NFGT_GAME_H_

#include <cstdint>
#include <string>
#include <vector>

namespace nfgt {

// One action index per player.
using JointAction = std::vector<int>;

// An N-player normal-form game. Payoffs are stored flat, row-major, with
// the player axis leading: payoffs[p * J + j] is player p's payoff under
// the joint action with row-major index j. An empty mask means every joint
// action is observed; otherwise mask[j] != 0 marks joint action j observed.
struct Game {
  int num_players = 0;
  std::vector<int> actions_per_player;
  std::vector<double> payoffs;
  std::vector<uint8_t> mask;

  int64_t NumJointActions() const {
    int64_t j = 1;
    for (int t : actions_per_player) j *= t;
    return j;
  }

  // Row-major strides of the joint-action index, one per player.
  std::vector<int64_t> Strides() const {
    std::vector<int64_t> s(num_players, 1);
    for (int p = num_players - 2; p >= 0; --p) {
      s[p] = s[p + 1] * actions_per_player[p + 1];
    }
    return s;
  }

  int64_t Index(const JointAction& a) const {
    auto s = Strides();
    int64_t j = 0;
    for (int p = 0; p < num_players; ++p) j += s[p] * a[p];
    return j;
  }

  JointAction Coords(int64_t j) const {
    JointAction a(num_players);
    for (int p = num_players - 1; p >= 0; --p) {
      a[p] = static_cast<int>(j % actions_per_player[p]);
      j /= actions_per_player[p];
    }
    return a;
  }

  double Payoff(int player, int64_t joint_index) const {
    return payoffs[player * NumJointActions() + joint_index];
  }
  double& Payoff(int player, int64_t joint_index) {
    return payoffs[player * NumJointActions() + joint_index];
  }

  bool FullyObserved() const { return mask.empty(); }
  bool Observed(int64_t joint_index) const {
    return mask.empty() || mask[joint_index] != 0;
  }
};

// A strong isomorphism: player p of the source becomes player
// player_perm[p] of the target, and its action i becomes action
// action_perms[p][i]. action_perms[p] is a permutation of the source
// player p's own action set.
struct Isomorphism {
  std::vector<int> player_perm;
  std::vector<std::vector<int>> action_perms;
};

// Latent vectors generating a disc game: P_ij = logistic(u_i.v_j - u_j.v_i).
struct DiscLatents {
  int T = 0;
  int Z = 0;
  std::vector<double> u;  // [T, Z] row-major
  std::vector<double> v;  // [T, Z] row-major
};

// Throws std::invalid_argument naming the offending field if any Game
// invariant is violated. Non-finite payoffs are legal at unobserved cells.
void ValidateGame(const Game& game);

void ValidateIsomorphism(const Game& game, const Isomorphism& iso);

// Relabels players and actions: the result G' satisfies
// G'_{w(p)}(b) = G_p(a) with b_{w(q)} = tau_q(a_q), and the mask moves the
// same way. Action counts follow their players.
Game ApplyIsomorphism(const Game& game, const Isomorphism& iso);

Isomorphism IdentityIsomorphism(const Game& game);
Isomorphism InverseIsomorphism(const Isomorphism& iso);
// Composition: ApplyIsomorphism(g, Compose(second, first)) equals applying
// `first` then `second`.
Isomorphism Compose(const Isomorphism& second, const Isomorphism& first);

// Uniformly random relabeling of a game's players and actions.
Isomorphism RandomIsomorphism(const Game& game, Rng& rng);

// True iff ApplyIsomorphism(game, iso) matches game within tol (max-abs over
// payoffs, exact on the mask).
bool IsAutomorphism(const Game& game, const Isomorphism& iso, double tol);

// Maps a fully observed game onto the equilibrium-invariant subspace:
// per player, payoffs are de-meaned over that player's own actions and
// rescaled to Frobenius norm sqrt(prod_q T_q). A player slice whose
// de-meaned norm falls below 1e-12 becomes all zeros.
Game InvariantNormalize(const Game& game);

// I.i.d. standard-normal payoffs pushed through InvariantNormalize.
Game SampleInvariantGame(uint64_t seed, int num_players,
                         const std::vector<int>& actions_per_player);

// Disc game of size T with latent dimension Z: latents are standard normal
// plus one shared Uniform(-1,1) shift per latent matrix. Player 1 receives
// P_ij, player 2 receives 1 - P_ij.
std::pair<Game, DiscLatents> SampleDiscGame(uint64_t seed, int T, int Z);

// I.i.d. Bernoulli(p_observe) observation mask in row-major order.
std::vector<uint8_t> SampleMask(uint64_t seed, const std::vector<int>& shape,
                                double p_observe);

// coordination, anti_coordination, matching_pennies or anti_cycle.
Game BuildNamedGame(const std::string& family);

// --- Game JSON (schema: num_players, actions_per_player, payoffs, mask) ---
// Writers may embed "version" and "seed" metadata; readers accept those two
// fields and reject anything else unknown.
std::string GameToJson(const Game& game, const std::string& tool_version = "",
                       int64_t seed = -1);
Game GameFromJson(const std::string& text);
Game LoadGameFile(const std::string& path);
void SaveGameFile(const Game& game, const std::string& path,
                  const std::string& tool_version = "", int64_t seed = -1);

// --- Permutation helpers used by equivariance checks ---

// Permutes a per-player list of matrices (embeddings, marginals, ...):
// out[w(p)][tau_p(i)] = in[p][i].
template <typename PerPlayer>
PerPlayer PermutePerPlayer(const PerPlayer& in, const Isomorphism& iso) {
  PerPlayer out(in.size());
  for (size_t p = 0; p < in.size(); ++p) {
    auto& dst = out[iso.player_perm[p]];
    dst = in[p];
    for (size_t i = 0; i < in[p].size(); ++i) {
      dst[iso.action_perms[p][i]] = in[p][i];
    }
  }
  return out;
}

// Permutes a joint-action-shaped tensor: out(b) = in(a), b_{w(q)} = tau_q(a_q).
std::vector<double> PermuteJointTensor(const Game& game,
                                       const std::vector<double>& values,
                                       const Isomorphism& iso);

// Permutes a payoff-shaped tensor [N * J]: out_{w(p)}(b) = in_p(a).
std::vector<double> PermutePayoffTensor(const Game& game,
                                        const std::vector<double>& values,
                                        const Isomorphism& iso);

}  // namespace nfgt

#endif  // NFGT_GAME_H_
