#include "seedaln/eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seedaln/edit_distance.hpp"
#include "seedaln/seed_index.hpp"

namespace seedaln {

ScoreKind score_alignment(ResultKind kind, std::string_view contig,
                          uint64_t position_in_contig, Direction direction,
                          const Truth& truth, uint64_t tolerance) {
    if (kind != ResultKind::SingleHit) return ScoreKind::NotConfident;
    if (contig != truth.contig || direction != truth.direction)
        return ScoreKind::Wrong;
    uint64_t delta = position_in_contig > truth.position
                         ? position_in_contig - truth.position
                         : truth.position - position_in_contig;
    return delta <= tolerance ? ScoreKind::Correct : ScoreKind::Wrong;
}

ScoreKind score_result(const AlignmentResult& result, const Truth& truth,
                       uint64_t tolerance, const PackedGenome& g) {
    if (result.kind != ResultKind::SingleHit) return ScoreKind::NotConfident;
    ContigCoordinate coord = g.to_contig_coordinate(result.position);
    return score_alignment(result.kind, coord.contig_name,
                           coord.offset_in_contig, result.direction, truth,
                           tolerance);
}

void EvalReport::add(ResultKind kind, std::optional<ScoreKind> score) {
    total++;
    switch (kind) {
        case ResultKind::SingleHit: single++; break;
        case ResultKind::MultipleHits: multiple++; break;
        case ResultKind::NotFound: notfound++; break;
    }
    if (!score) {
        if (kind == ResultKind::SingleHit) no_truth++;
        return;
    }
    if (*score == ScoreKind::Correct) correct++;
    if (*score == ScoreKind::Wrong) wrong++;
}

void EvalReport::merge(const EvalReport& o) {
    total += o.total;
    single += o.single;
    multiple += o.multiple;
    notfound += o.notfound;
    correct += o.correct;
    wrong += o.wrong;
    no_truth += o.no_truth;
    elapsed_seconds = std::max(elapsed_seconds, o.elapsed_seconds);
    stats.merge(o.stats);
}

double EvalReport::aligned_percent() const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(single) /
                                  static_cast<double>(total);
}

double EvalReport::error_percent() const {
    uint64_t confident = correct + wrong;
    return confident == 0 ? 0.0 : 100.0 * static_cast<double>(wrong) /
                                      static_cast<double>(confident);
}

double EvalReport::reads_per_second() const {
    return elapsed_seconds > 0 ? static_cast<double>(total) / elapsed_seconds
                               : 0.0;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(4);
    out << "total=" << total << "\n"
        << "single=" << single << "\n"
        << "multiple=" << multiple << "\n"
        << "notfound=" << notfound << "\n"
        << "aligned_pct=" << aligned_percent() << "\n";
    if (error_defined())
        out << "error_pct=" << error_percent() << "\n";
    else
        out << "error_pct=na\n";
    out << "correct=" << correct << "\n"
        << "wrong=" << wrong << "\n"
        << "no_truth=" << no_truth << "\n"
        << "elapsed_sec=" << elapsed_seconds << "\n"
        << "reads_per_sec=" << reads_per_second() << "\n"
        << "seed_lookups=" << stats.seed_lookups << "\n"
        << "seeds_skipped_n=" << stats.seeds_skipped_n << "\n"
        << "seeds_skipped_popular=" << stats.seeds_skipped_popular << "\n"
        << "reads_too_short=" << stats.reads_too_short << "\n"
        << "distance_calls=" << stats.distance_calls << "\n"
        << "distance_calls_after_first=" << stats.distance_calls_after_first
        << "\n"
        << "early_out_after_first=" << stats.early_out_after_first << "\n";
    if (stats.distance_calls_after_first > 0)
        out << "early_out_rate_after_first="
            << static_cast<double>(stats.early_out_after_first) /
                   static_cast<double>(stats.distance_calls_after_first)
            << "\n";
    else
        out << "early_out_rate_after_first=na\n";
    if (stats.single_hits > 0)
        out << "first_scored_was_best_rate="
            << static_cast<double>(stats.first_scored_was_best) /
                   static_cast<double>(stats.single_hits)
            << "\n";
    else
        out << "first_scored_was_best_rate=na\n";
    out << "multi_early_exits=" << stats.multi_early_exits << "\n"
        << "pruning_exits=" << stats.pruning_exits << "\n"
        << "dp_cells=" << stats.dp_cells << "\n";
    return out.str();
}

OracleIndex::OracleIndex(const PackedGenome& g, int q) : q_(q) {
    const uint64_t keys = uint64_t{1} << (2 * q);
    const uint64_t mask = keys - 1;
    starts_.assign(keys + 1, 0);

    // two passes: counts, then placement
    auto each_window = [&](auto&& fn) {
        uint64_t key = 0;
        int64_t last_n = -1;
        for (uint64_t pos = 0; pos < g.size(); ++pos) {
            Base b = g.at(pos);
            if (b == Base::N) {
                last_n = static_cast<int64_t>(pos);
                key = (key << 2) & mask;
                continue;
            }
            key = ((key << 2) | static_cast<uint64_t>(b)) & mask;
            if (pos + 1 < static_cast<uint64_t>(q)) continue;
            uint64_t start = pos + 1 - q;
            if (static_cast<int64_t>(start) <= last_n) continue;
            fn(key, start);
        }
    };

    each_window([&](uint64_t key, uint64_t) { starts_[key + 1]++; });
    for (uint64_t k = 1; k <= keys; ++k) starts_[k] += starts_[k - 1];
    positions_.resize(starts_[keys]);
    std::vector<uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    each_window([&](uint64_t key, uint64_t start) {
        positions_[cursor[key]++] = static_cast<uint32_t>(start);
    });
}

std::span<const uint32_t> OracleIndex::lookup(uint64_t key) const {
    return std::span<const uint32_t>(positions_)
        .subspan(starts_[key], starts_[key + 1] - starts_[key]);
}

OracleContext::OracleContext(const PackedGenome& g) : g_(g) {
    // a long q sized to the genome for the cheap first pass, shorter
    // tables for reads whose piece budget forces small pieces
    int q_hi = 2;
    while ((uint64_t{1} << (2 * (q_hi + 1))) <= g.size() * 16 && q_hi < 12)
        ++q_hi;
    indexes_.emplace_back(g, q_hi);
    for (int q : {7, 6, 5})
        if (q < q_hi) indexes_.emplace_back(g, q);
}

const OracleIndex* OracleContext::index_for(size_t piece_len) const {
    for (const OracleIndex& idx : indexes_)
        if (static_cast<size_t>(idx.q()) <= piece_len) return &idx;
    return nullptr;
}

namespace {

void scan_one_strand(const std::string& oriented, Direction dir,
                     const OracleContext& ctx, int d_limit, int bucket_size,
                     std::vector<OracleHit>& out) {
    const PackedGenome& g = ctx.genome();
    const uint64_t genome_len = g.size();
    const size_t read_len = oriented.size();
    if (genome_len == 0 || read_len == 0) return;

    size_t n_count = static_cast<size_t>(
        std::count(oriented.begin(), oriented.end(), 'N'));
    size_t pieces = static_cast<size_t>(d_limit) + 1 + n_count;
    size_t piece_len = read_len / pieces;
    const OracleIndex* oi = piece_len > 0 ? ctx.index_for(piece_len) : nullptr;

    std::vector<uint64_t> candidates;
    if (oi == nullptr) {
        candidates.resize(genome_len);
        for (uint64_t p = 0; p < genome_len; ++p) candidates[p] = p;
    } else {
        // any location within d_limit contains one piece exactly, at a
        // shift of at most d_limit from its read offset
        for (size_t i = 0; i < pieces; ++i) {
            size_t a = i * piece_len;
            uint64_t key;
            if (!pack_seed(std::string_view(oriented).substr(
                               a, static_cast<size_t>(oi->q())),
                           key))
                continue;
            for (uint32_t x : oi->lookup(key)) {
                int64_t center = static_cast<int64_t>(x) - static_cast<int64_t>(a);
                int64_t lo = center - d_limit;
                int64_t hi = center + d_limit;
                if (lo < 0) lo = 0;
                if (hi >= static_cast<int64_t>(genome_len))
                    hi = static_cast<int64_t>(genome_len) - 1;
                for (int64_t p = lo; p <= hi; ++p)
                    candidates.push_back(static_cast<uint64_t>(p));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
    }

    // candidates ascend, so buckets close in order
    int64_t open_bucket = -1;
    int open_best = kInfDistance;
    uint64_t open_pos = 0;
    auto close_bucket = [&] {
        if (open_bucket >= 0 && open_best < kInfDistance)
            out.push_back({open_pos, dir, open_best});
        open_bucket = -1;
        open_best = kInfDistance;
    };

    for (uint64_t p : candidates) {
        int64_t bucket = static_cast<int64_t>(p / static_cast<uint64_t>(bucket_size));
        if (bucket != open_bucket) {
            close_bucket();
            open_bucket = bucket;
        }
        std::string window =
            g.substring(p, read_len + static_cast<size_t>(d_limit));
        DistanceOutcome d = bounded_distance(oriented, window, d_limit);
        if (d && *d < open_best) {
            open_best = *d;
            open_pos = p;
        }
    }
    close_bucket();
}

}  // namespace

std::vector<OracleHit> oracle_scan(const Read& read, const OracleContext& ctx,
                                   int d_limit, int bucket_size) {
    std::vector<OracleHit> out;
    scan_one_strand(read.bases, Direction::Forward, ctx, d_limit, bucket_size,
                    out);
    std::string rc = reverse_complement(read.bases);
    scan_one_strand(rc, Direction::ReverseComplement, ctx, d_limit, bucket_size,
                    out);
    std::sort(out.begin(), out.end(), [](const OracleHit& a, const OracleHit& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.position != b.position) return a.position < b.position;
        return static_cast<int>(a.direction) < static_cast<int>(b.direction);
    });
    return out;
}

AlignmentResult oracle_align(const Read& read, const OracleContext& ctx,
                             const AlignerParams& params) {
    const int d_max = params.effective_max_distance(read.bases.size());
    const int c = params.confidence_threshold;
    const int dl_full = d_max + c - 1;

    AlignmentResult result;
    if (read.bases.size() < static_cast<size_t>(params.seed_size)) return result;

    // staged limits: a cheap pass settles most reads, escalate when the
    // best hit sits too close to the stage limit to rule out a runner-up
    for (int dl : {std::min(6, dl_full), dl_full}) {
        std::vector<OracleHit> hits =
            oracle_scan(read, ctx, dl, params.bucket_size);
        bool final_stage = dl == dl_full;
        if (hits.empty()) {
            if (final_stage) return result;  // NotFound
            continue;
        }
        if (!final_stage && hits.front().distance + c - 1 > dl) continue;

        BestTracker tracker(params.bucket_size);
        for (const OracleHit& h : hits)
            tracker.observe(h.distance, h.position, h.direction);
        result.kind = classify_confidence(tracker.d_best(), tracker.d_second(),
                                          d_max, c);
        if (result.kind != ResultKind::NotFound &&
            tracker.d_best() <= d_max) {
            result.has_position = true;
            result.position = tracker.best_position();
            result.direction = tracker.best_direction();
            result.distance = tracker.d_best();
            result.gap = tracker.gap();
        }
        return result;
    }
    return result;
}

}  // namespace seedaln
