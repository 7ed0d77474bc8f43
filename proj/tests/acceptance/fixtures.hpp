#pragma once

#include <cstdint>
#include <string>

#include "seedaln/genome.hpp"

namespace fixtures {

/// Uniform random A/C/G/T sequence.
std::string random_sequence(uint64_t seed, size_t length);

/// Deterministic evaluation reference with the repeat structure real
/// genomes have: a random backbone plus a diverged high-copy repeat
/// family, a handful of low-divergence segmental duplications, and
/// homopolymer/microsatellite runs. Split into equal contigs.
seedaln::PackedGenome evaluation_reference(uint64_t seed, size_t length,
                                           int contigs);

}  // namespace fixtures
