#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "seedaln/genome.hpp"
#include "seedaln/read.hpp"
#include "seedaln/seed_index.hpp"

namespace seedaln {

constexpr int kInfDistance = std::numeric_limits<int>::max() / 4;

/// Tuning parameters. max_distance < 0 selects the default of
/// ceil(0.12 * read_length), computed per read.
struct AlignerParams {
    int seed_size = 20;            // s: seed length in bases
    int seeds_to_try = 25;         // n: seeds drawn per read
    int max_distance = -1;         // d_max: largest reportable edit distance
    int confidence_threshold = 2;  // c: best/second-best gap for a unique call
    int max_hits = 300;            // h_max: skip seeds with more index hits
    int bucket_size = 32;          // candidate positions merged per bucket
    bool force_max_dlimit = false; // instrumentation: disable d_limit shrinking

    void validate() const;  // throws std::invalid_argument
    int effective_max_distance(size_t read_length) const;
};

enum class ResultKind : uint8_t { SingleHit, MultipleHits, NotFound };

constexpr int kGapCap = 1000;

struct AlignmentResult {
    ResultKind kind = ResultKind::NotFound;
    bool has_position = false;    // always true for SingleHit; true for
                                  // MultipleHits when a best location was scored
    uint64_t position = 0;        // forward-strand start of the alignment
    Direction direction = Direction::Forward;
    int distance = -1;            // edit distance of the best hit
    int gap = 0;                  // d_second - d_best, capped at kGapCap
};

/// Workload counters, mergeable across workers.
struct AlignStats {
    uint64_t reads = 0;
    uint64_t reads_too_short = 0;
    uint64_t seed_lookups = 0;
    uint64_t seeds_skipped_n = 0;
    uint64_t seeds_skipped_popular = 0;
    uint64_t reads_all_seeds_popular = 0;
    uint64_t distance_calls = 0;
    uint64_t distance_calls_after_first = 0;
    uint64_t early_out_after_first = 0;
    uint64_t dp_cells = 0;
    uint64_t multi_early_exits = 0;
    uint64_t pruning_exits = 0;
    uint64_t first_scored_was_best = 0;
    uint64_t single_hits = 0;
    uint64_t multiple_hits = 0;
    uint64_t not_found = 0;

    void merge(const AlignStats& o);
};

/// Offsets at which seeds are drawn from a read: all non-overlapping
/// seeds first, then tiers shifted by s/2, then s/4 and 3s/4, and so on;
/// offsets past read_length - s are dropped, duplicates removed, the
/// list truncated to n. Empty when the read is shorter than s.
std::vector<int> seed_offsets(size_t read_length, int s, int n);

/// Final three-way call from the best and second-best distances.
ResultKind classify_confidence(int d_best, int d_second, int d_max, int c);

/// Best/second-best distance bookkeeping shared by the aligner and the
/// exhaustive-scan referee. Scores whose positions land within
/// merge_radius of the current best hit (same strand) refine that hit
/// instead of registering as a competing second-best, so indel-shifted
/// anchors and bucket-boundary straddles count as one location.
class BestTracker {
public:
    explicit BestTracker(int merge_radius) : merge_radius_(merge_radius) {}

    void observe(int distance, uint64_t position, Direction direction);

    int d_best() const { return d_best_; }
    int d_second() const { return d_second_; }
    bool has_best() const { return d_best_ < kInfDistance; }
    uint64_t best_position() const { return best_position_; }
    Direction best_direction() const { return best_direction_; }
    int gap() const;

private:
    int merge_radius_;
    int d_best_ = kInfDistance;
    int d_second_ = kInfDistance;
    uint64_t best_position_ = 0;
    Direction best_direction_ = Direction::Forward;
};

/// Per-read diagnostics for property tests: what the candidate-count
/// exit saw when it fired.
struct AlignTrace {
    bool pruning_exit = false;
    int t_at_exit = 0;       // non-overlapping seeds tested when it fired
    int d_best_at_exit = kInfDistance;
    std::vector<std::pair<Direction, uint64_t>> anchors_seen;
};

/// Single-read aligner: seed lookup, per-bucket candidate accumulation,
/// distance scoring under a shrinking limit, and the two early exits.
/// Holds per-worker scratch, so use one instance per thread; the index
/// and genome are shared read-only.
class Aligner {
public:
    Aligner(const SeedIndex& idx, const PackedGenome& g, AlignerParams params);

    AlignmentResult align(const Read& read);

    const AlignStats& stats() const { return stats_; }
    AlignStats& stats() { return stats_; }
    const AlignerParams& params() const { return params_; }
    void set_trace(AlignTrace* trace) { trace_ = trace; }

private:
    struct Candidate {
        uint64_t bucket;
        Direction dir;
        uint32_t seeds_hitting = 0;
        uint64_t anchor_mask = 0;  // bit i: anchor bucket*bucket_size + i seen
        bool scored = false;
    };

    void add_hit(uint64_t anchor, Direction dir);
    bool has_unscored() const;
    // Scores the unscored candidate with the most seeds hitting, if any.
    void score_best_candidate(const std::string& bases, const std::string& rc,
                              int d_max, BestTracker& tracker);
    void score_candidate(Candidate& cand, const std::string& bases,
                         const std::string& rc, int d_max, BestTracker& tracker);

    const SeedIndex& index_;
    const PackedGenome& genome_;
    AlignerParams params_;
    AlignStats stats_;
    AlignTrace* trace_ = nullptr;

    // per-read scratch, reused across calls
    std::vector<Candidate> candidates_;
    std::unordered_map<uint64_t, uint32_t> bucket_map_;
    uint64_t calls_this_read_ = 0;
    bool first_scored_done_ = false;
    bool first_locus_valid_ = false;
    uint64_t first_locus_pos_ = 0;
    Direction first_locus_dir_ = Direction::Forward;
};

/// One-shot convenience wrapper around Aligner.
AlignmentResult align_read(const Read& read, const SeedIndex& idx,
                           const PackedGenome& g, const AlignerParams& params,
                           AlignStats* stats = nullptr);

}  // namespace seedaln
