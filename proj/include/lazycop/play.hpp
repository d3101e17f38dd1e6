#ifndef LAZYCOP_PLAY_HPP
#define LAZYCOP_PLAY_HPP

#include <iosfwd>
#include <string>

#include "lazycop/game.hpp"

namespace lazycop {

struct PlayOptions {
    bool human_is_robber = true;
    int max_rounds = 100;
    std::uint64_t state_budget = default_state_budget();
};

/// Interactive session against the solved game: the human side reads moves
/// from `in` (vertex ids, or "stay"/"pass"); the engine side plays its optimal
/// policy, or a deterministic delaying/chasing policy when its position is
/// lost. The full transcript goes to `out`, so a scripted input stream
/// reproduces a session byte for byte. Returns 0 when the session ended by
/// capture or round cap, 1 when input ran out at a prompt.
int run_play(const Graph& g, Rules rules, const PlayOptions& opt, std::istream& in,
             std::ostream& out);

}  // namespace lazycop

#endif
