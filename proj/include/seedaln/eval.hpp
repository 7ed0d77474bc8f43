#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seedaln/aligner.hpp"
#include "seedaln/genome.hpp"
#include "seedaln/read.hpp"
#include "seedaln/simulator.hpp"

namespace seedaln {

enum class ScoreKind { Correct, Wrong, NotConfident };

/// Scores a confident call against the simulated truth: correct when it
/// lands within `tolerance` bases of the truth start on the same strand.
ScoreKind score_alignment(ResultKind kind, std::string_view contig,
                          uint64_t position_in_contig, Direction direction,
                          const Truth& truth, uint64_t tolerance);

/// Same, for an in-memory result carrying a global position.
ScoreKind score_result(const AlignmentResult& result, const Truth& truth,
                       uint64_t tolerance, const PackedGenome& g);

/// Aggregated run metrics: the fraction confidently aligned, the error
/// fraction among confident alignments with known truth, throughput, and
/// the aligner's workload counters.
struct EvalReport {
    uint64_t total = 0;
    uint64_t single = 0;
    uint64_t multiple = 0;
    uint64_t notfound = 0;
    uint64_t correct = 0;
    uint64_t wrong = 0;
    uint64_t no_truth = 0;
    double elapsed_seconds = 0;
    AlignStats stats;

    void add(ResultKind kind, std::optional<ScoreKind> score);
    void merge(const EvalReport& o);

    double aligned_percent() const;
    bool error_defined() const { return correct + wrong > 0; }
    double error_percent() const;  // over confident alignments with truth
    double reads_per_second() const;

    /// key=value lines, one metric per line.
    std::string to_text() const;
};

/// q-gram position table over the forward genome, the candidate
/// prefilter for the exhaustive referee.
class OracleIndex {
public:
    OracleIndex(const PackedGenome& g, int q);
    int q() const { return q_; }
    std::span<const uint32_t> lookup(uint64_t key) const;

private:
    int q_;
    std::vector<uint32_t> starts_;     // 4^q + 1 entries
    std::vector<uint32_t> positions_;
};

/// Prebuilt referee state for one genome (two q-gram tables sized to the
/// genome). Build once, share read-only across threads.
class OracleContext {
public:
    explicit OracleContext(const PackedGenome& g);
    const PackedGenome& genome() const { return g_; }

    /// Largest table with q <= piece_len, or nullptr (callers then fall
    /// back to scanning every genome position).
    const OracleIndex* index_for(size_t piece_len) const;

private:
    const PackedGenome& g_;
    std::vector<OracleIndex> indexes_;  // descending q
};

struct OracleHit {
    uint64_t position;
    Direction direction;
    int distance;
};

/// Referee scan: bounded_distance of the read against every genome
/// position on both strands (pruned losslessly: any location within
/// d_limit must contain one of d_limit+1 disjoint read pieces exactly),
/// reduced to per-bucket minima. Sorted best-first, ties by position,
/// forward before reverse.
std::vector<OracleHit> oracle_scan(const Read& read, const OracleContext& ctx,
                                   int d_limit, int bucket_size);

/// Ground-truth classification for acceptance checks: aggregates the
/// referee scan with the same best/second-best rules as the aligner and
/// applies classify_confidence. Exact but only practical on small
/// genomes.
AlignmentResult oracle_align(const Read& read, const OracleContext& ctx,
                             const AlignerParams& params);

}  // namespace seedaln
