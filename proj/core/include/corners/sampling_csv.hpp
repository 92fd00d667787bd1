#pragma once

#include <cstdint>
#include <string>

#include "corners/ensembles.hpp"

namespace corners {

// CSV renderings of repeated multilevel draws, one line per (draw, level):
//   draw,level,value[,value...]
// with values printed as %.16e (17 significant digits), largest first, and a
// '#' header recording the model, draw count, and seed.  Draw k always uses
// the dedicated substream Rng(seed, k), so the bytes depend only on
// (model, draws, seed); workers > 1 just splits the draw range across
// threads.  The ratio-process CSV reports the base spectrum as level 0.
std::string wishart_csv(const WishartModel& model, std::size_t draws,
                        std::uint64_t seed, int workers);
std::string jacobi_csv(const JacobiModel& model, std::size_t draws,
                       std::uint64_t seed, int workers);

}  // namespace corners
