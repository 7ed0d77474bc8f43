#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "seedaln/genome.hpp"
#include "seedaln/read.hpp"
#include "seedaln/seed_index.hpp"

namespace seedaln {

/// Simulation profile: germline-style mutations (SNPs, 1-3 base indels)
/// applied first, then per-base sequencing errors of which
/// indel_error_fraction are single-base indels and the rest substitutions.
struct SimProfile {
    size_t read_length = 100;
    double snp_rate = 0.0009;
    double indel_mutation_rate = 0.0001;
    double seq_error_rate = 0.02;
    double indel_error_fraction = 0.0;
    uint64_t rng_seed = 1;

    void validate() const;  // throws std::invalid_argument
};

/// Ground-truth origin of a simulated read: forward-strand start of the
/// pre-mutation locus.
struct Truth {
    std::string contig;
    uint64_t position = 0;  // 0-based offset within the contig
    Direction direction = Direction::Forward;
    uint64_t serial = 0;
    bool operator==(const Truth&) const = default;
};

struct SimulatedRead {
    Read read;
    Truth truth;
};

/// wgsim-style read name carrying the truth: "contig_pos_dir_serial" with
/// a 1-based position. Decoding is right-anchored so contig names may
/// contain underscores.
std::string encode_truth(const Truth& t);
std::optional<Truth> decode_truth(const std::string& name);

/// Deterministic read generator over a packed genome. Loci are uniform
/// over all positions where the read span fits inside one contig; loci
/// overlapping N are redrawn. Streams from the same seed are identical.
class ReadSimulator {
public:
    ReadSimulator(const PackedGenome& g, SimProfile profile);

    SimulatedRead next();

private:
    uint64_t pick_locus(std::string& contig_out, uint64_t& offset_out);

    const PackedGenome& genome_;
    SimProfile profile_;
    std::mt19937_64 rng_;
    uint64_t serial_ = 0;
    uint64_t placeable_ = 0;  // number of valid start positions
};

/// Four-line FASTQ record for one read.
std::string to_fastq(const Read& r);

}  // namespace seedaln
