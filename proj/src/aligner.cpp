#include "seedaln/aligner.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "seedaln/edit_distance.hpp"

namespace seedaln {

void AlignerParams::validate() const {
    if (seed_size < 1 || seed_size > 32)
        throw std::invalid_argument("seed-size must be in [1, 32]");
    if (seeds_to_try < 1)
        throw std::invalid_argument("seeds-to-try must be >= 1");
    if (max_distance < -1)
        throw std::invalid_argument("max-dist must be >= 0 (or -1 for auto)");
    if (confidence_threshold < 1)
        throw std::invalid_argument("confidence must be >= 1");
    if (max_hits < 1)
        throw std::invalid_argument("max-hits must be >= 1");
    if (bucket_size < 1 || bucket_size > 64)
        throw std::invalid_argument("bucket-size must be in [1, 64]");
}

int AlignerParams::effective_max_distance(size_t read_length) const {
    if (max_distance >= 0) return max_distance;
    return static_cast<int>((12 * read_length + 99) / 100);  // ceil(0.12 * len)
}

void AlignStats::merge(const AlignStats& o) {
    reads += o.reads;
    reads_too_short += o.reads_too_short;
    seed_lookups += o.seed_lookups;
    seeds_skipped_n += o.seeds_skipped_n;
    seeds_skipped_popular += o.seeds_skipped_popular;
    reads_all_seeds_popular += o.reads_all_seeds_popular;
    distance_calls += o.distance_calls;
    distance_calls_after_first += o.distance_calls_after_first;
    early_out_after_first += o.early_out_after_first;
    dp_cells += o.dp_cells;
    multi_early_exits += o.multi_early_exits;
    pruning_exits += o.pruning_exits;
    first_scored_was_best += o.first_scored_was_best;
    single_hits += o.single_hits;
    multiple_hits += o.multiple_hits;
    not_found += o.not_found;
}

std::vector<int> seed_offsets(size_t read_length, int s, int n) {
    std::vector<int> out;
    if (s < 1 || n < 1 || read_length < static_cast<size_t>(s)) return out;
    const int max_off = static_cast<int>(read_length) - s;
    std::vector<char> seen(static_cast<size_t>(max_off) + 1, 0);

    auto emit_tier = [&](int shift) {
        for (int o = shift; o <= max_off && static_cast<int>(out.size()) < n;
             o += s) {
            if (!seen[o]) {
                seen[o] = 1;
                out.push_back(o);
            }
        }
    };

    emit_tier(0);
    // shifts s/2, then s/4, 3s/4, then s/8, 3s/8, ...; levels beyond
    // 4s contribute no new values
    for (int level = 1;
         (int64_t{1} << level) <= 4 * s && static_cast<int>(out.size()) < n;
         ++level) {
        for (int64_t odd = 1;
             odd < (int64_t{1} << level) && static_cast<int>(out.size()) < n;
             odd += 2) {
            emit_tier(static_cast<int>((odd * s) >> level));
        }
    }
    return out;
}

ResultKind classify_confidence(int d_best, int d_second, int d_max, int c) {
    if (d_best <= d_max && d_second >= d_best + c) return ResultKind::SingleHit;
    if (d_best <= d_max) return ResultKind::MultipleHits;
    return ResultKind::NotFound;
}

void BestTracker::observe(int distance, uint64_t position, Direction direction) {
    if (has_best() && direction == best_direction_) {
        uint64_t delta = position > best_position_ ? position - best_position_
                                                   : best_position_ - position;
        if (delta <= static_cast<uint64_t>(merge_radius_)) {
            // same location seen through a shifted anchor or the
            // neighbouring bucket: refine, do not demote to second-best
            if (distance < d_best_) {
                d_best_ = distance;
                best_position_ = position;
            }
            return;
        }
    }
    if (distance < d_best_) {
        d_second_ = d_best_;
        d_best_ = distance;
        best_position_ = position;
        best_direction_ = direction;
    } else if (distance < d_second_) {
        d_second_ = distance;
    }
}

int BestTracker::gap() const {
    if (d_second_ >= kInfDistance) return kGapCap;
    return std::min(d_second_ - d_best_, kGapCap);
}

Aligner::Aligner(const SeedIndex& idx, const PackedGenome& g,
                 AlignerParams params)
    : index_(idx), genome_(g), params_(params) {
    params_.validate();
    if (index_.seed_size() != params_.seed_size)
        throw std::invalid_argument("index seed size does not match params");
}

void Aligner::add_hit(uint64_t anchor, Direction dir) {
    const uint64_t bs = static_cast<uint64_t>(params_.bucket_size);
    uint64_t bucket = anchor / bs;
    uint64_t key = bucket * 2 + static_cast<uint64_t>(dir);
    auto [it, inserted] =
        bucket_map_.try_emplace(key, static_cast<uint32_t>(candidates_.size()));
    if (inserted) candidates_.push_back({bucket, dir});
    Candidate& cand = candidates_[it->second];
    cand.seeds_hitting++;
    cand.anchor_mask |= uint64_t{1} << (anchor - bucket * bs);
}

bool Aligner::has_unscored() const {
    return std::any_of(candidates_.begin(), candidates_.end(),
                       [](const Candidate& c) { return !c.scored; });
}

void Aligner::score_best_candidate(const std::string& bases,
                                   const std::string& rc, int d_max,
                                   BestTracker& tracker) {
    Candidate* best = nullptr;
    uint64_t best_amin = 0;
    const uint64_t bs = static_cast<uint64_t>(params_.bucket_size);
    for (Candidate& cand : candidates_) {
        if (cand.scored) continue;
        uint64_t amin = cand.bucket * bs +
                        static_cast<uint64_t>(std::countr_zero(cand.anchor_mask));
        bool better;
        if (!best) {
            better = true;
        } else if (cand.seeds_hitting != best->seeds_hitting) {
            better = cand.seeds_hitting > best->seeds_hitting;
        } else if (amin != best_amin) {
            better = amin < best_amin;
        } else {
            better = static_cast<int>(cand.dir) < static_cast<int>(best->dir);
        }
        if (better) {
            best = &cand;
            best_amin = amin;
        }
    }
    if (best) score_candidate(*best, bases, rc, d_max, tracker);
}

void Aligner::score_candidate(Candidate& cand, const std::string& bases,
                              const std::string& rc, int d_max,
                              BestTracker& tracker) {
    cand.scored = true;

    const int c = params_.confidence_threshold;
    int d_limit;
    if (tracker.d_best() > d_max) {
        d_limit = d_max + c - 1;
    } else if (tracker.d_second() >= tracker.d_best() + c) {
        d_limit = tracker.d_best() + c - 1;
    } else {
        d_limit = tracker.d_best() - 1;
    }
    if (params_.force_max_dlimit) d_limit = d_max + c - 1;
    if (d_limit < 0) return;  // nothing this bucket scores could change

    const std::string& oriented =
        cand.dir == Direction::Forward ? bases : rc;
    const uint64_t bs = static_cast<uint64_t>(params_.bucket_size);
    const uint64_t base_pos = cand.bucket * bs;

    int best_d = kInfDistance;
    uint64_t best_anchor = 0;
    for (uint64_t mask = cand.anchor_mask; mask != 0; mask &= mask - 1) {
        uint64_t anchor = base_pos + static_cast<uint64_t>(std::countr_zero(mask));
        if (anchor >= genome_.size()) continue;
        std::string window =
            genome_.substring(anchor, oriented.size() + static_cast<size_t>(d_limit));
        DistanceOutcome out =
            bounded_distance(oriented, window, d_limit, &stats_.dp_cells);
        stats_.distance_calls++;
        calls_this_read_++;
        if (calls_this_read_ > 1) {
            stats_.distance_calls_after_first++;
            if (!out) stats_.early_out_after_first++;
        }
        if (out && *out < best_d) {
            best_d = *out;
            best_anchor = anchor;
        }
    }

    if (!first_scored_done_) {
        first_scored_done_ = true;
        if (best_d < kInfDistance) {
            first_locus_valid_ = true;
            first_locus_pos_ = best_anchor;
            first_locus_dir_ = cand.dir;
        }
    }
    if (best_d < kInfDistance) tracker.observe(best_d, best_anchor, cand.dir);
}

AlignmentResult Aligner::align(const Read& read) {
    stats_.reads++;

    const std::string& bases = read.bases;
    const size_t len = bases.size();
    const int s = params_.seed_size;

    AlignmentResult result;
    if (len < static_cast<size_t>(s)) {
        stats_.reads_too_short++;
        stats_.not_found++;
        return result;
    }

    const int d_max = params_.effective_max_distance(len);
    const int c = params_.confidence_threshold;
    const std::vector<int> offsets = seed_offsets(len, s, params_.seeds_to_try);
    const int tier0_count = static_cast<int>(len / static_cast<size_t>(s));
    const std::string rc = reverse_complement(bases);

    candidates_.clear();
    bucket_map_.clear();
    calls_this_read_ = 0;
    first_scored_done_ = false;
    first_locus_valid_ = false;
    if (trace_) *trace_ = AlignTrace{};
    BestTracker tracker(params_.bucket_size);

    int tested_non_overlapping = 0;
    bool any_lookup = false;
    bool any_popular = false;
    bool early_multi = false;

    for (size_t i = 0; i < offsets.size(); ++i) {
        const int off = offsets[i];
        std::string_view seed(bases.data() + off, static_cast<size_t>(s));
        if (seed.find('N') != std::string_view::npos) {
            stats_.seeds_skipped_n++;
            continue;
        }
        LookupResult hits = index_.lookup(seed);
        stats_.seed_lookups++;
        if (hits.count() > static_cast<size_t>(params_.max_hits)) {
            any_popular = true;
            stats_.seeds_skipped_popular++;
            continue;
        }
        any_lookup = true;
        if (static_cast<int>(i) < tier0_count) ++tested_non_overlapping;

        for (uint64_t p : hits.forward) {
            int64_t anchor = static_cast<int64_t>(p) - off;
            uint64_t a = anchor < 0 ? 0 : static_cast<uint64_t>(anchor);
            add_hit(a, Direction::Forward);
            if (trace_) trace_->anchors_seen.push_back({Direction::Forward, a});
        }
        const int rc_shift = static_cast<int>(len) - s - off;
        for (uint64_t p : hits.rc) {
            int64_t anchor = static_cast<int64_t>(p) - rc_shift;
            uint64_t a = anchor < 0 ? 0 : static_cast<uint64_t>(anchor);
            add_hit(a, Direction::ReverseComplement);
            if (trace_)
                trace_->anchors_seen.push_back({Direction::ReverseComplement, a});
        }

        score_best_candidate(bases, rc, d_max, tracker);

        if (tracker.d_best() < c && tracker.d_second() < tracker.d_best() + c) {
            // two locations within c of each other: no hit can be confident
            stats_.multi_early_exits++;
            early_multi = true;
            break;
        }
        if (tested_non_overlapping >= tracker.d_best() + c) {
            // any location not yet seen as a candidate differs in every
            // tested non-overlapping seed, so its distance is >= t
            stats_.pruning_exits++;
            if (trace_) {
                trace_->pruning_exit = true;
                trace_->t_at_exit = tested_non_overlapping;
                trace_->d_best_at_exit = tracker.d_best();
            }
            while (has_unscored()) {
                score_best_candidate(bases, rc, d_max, tracker);
                if (tracker.d_best() < c &&
                    tracker.d_second() < tracker.d_best() + c) {
                    stats_.multi_early_exits++;
                    early_multi = true;
                    break;
                }
            }
            break;
        }
    }

    ResultKind kind;
    if (early_multi) {
        kind = ResultKind::MultipleHits;
    } else {
        kind = classify_confidence(tracker.d_best(), tracker.d_second(), d_max, c);
        if (kind == ResultKind::NotFound && any_popular && !any_lookup) {
            // every usable seed was over h_max: the read matched too many
            // places to say anything, which is not the same as no match
            stats_.reads_all_seeds_popular++;
            kind = ResultKind::MultipleHits;
        }
    }

    result.kind = kind;
    switch (kind) {
        case ResultKind::SingleHit:
            result.has_position = true;
            result.position = tracker.best_position();
            result.direction = tracker.best_direction();
            result.distance = tracker.d_best();
            result.gap = tracker.gap();
            stats_.single_hits++;
            if (first_locus_valid_ &&
                first_locus_dir_ == tracker.best_direction()) {
                uint64_t delta = first_locus_pos_ > tracker.best_position()
                                     ? first_locus_pos_ - tracker.best_position()
                                     : tracker.best_position() - first_locus_pos_;
                if (delta <= static_cast<uint64_t>(params_.bucket_size))
                    stats_.first_scored_was_best++;
            }
            break;
        case ResultKind::MultipleHits:
            if (tracker.has_best() && tracker.d_best() <= d_max) {
                result.has_position = true;
                result.position = tracker.best_position();
                result.direction = tracker.best_direction();
                result.distance = tracker.d_best();
                result.gap = tracker.gap();
            }
            stats_.multiple_hits++;
            break;
        case ResultKind::NotFound:
            stats_.not_found++;
            break;
    }
    return result;
}

AlignmentResult align_read(const Read& read, const SeedIndex& idx,
                           const PackedGenome& g, const AlignerParams& params,
                           AlignStats* stats) {
    Aligner aligner(idx, g, params);
    AlignmentResult r = aligner.align(read);
    if (stats) stats->merge(aligner.stats());
    return r;
}

}  // namespace seedaln
