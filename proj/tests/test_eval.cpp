#include <doctest.h>

#include <random>

#include "seedaln/edit_distance.hpp"
#include "seedaln/eval.hpp"

using namespace seedaln;

namespace {

std::string random_bases(std::mt19937_64& rng, size_t len) {
    static const char acgt[] = "ACGT";
    std::string s;
    s.reserve(len);
    for (size_t i = 0; i < len; ++i) s += acgt[rng() % 4];
    return s;
}

Read make_read(std::string bases) {
    Read r;
    r.name = "r";
    r.qualities.assign(bases.size(), 'I');
    r.bases = std::move(bases);
    return r;
}

// referee-of-the-referee: per-bucket minima by scanning every position
// with the full DP table, no prefilter, no banding
std::vector<OracleHit> brute_scan(const Read& read, const PackedGenome& g,
                                  int d_limit, int bucket_size) {
    std::vector<OracleHit> out;
    std::string rc = reverse_complement(read.bases);
    for (Direction dir : {Direction::Forward, Direction::ReverseComplement}) {
        const std::string& r = dir == Direction::Forward ? read.bases : rc;
        int best = kInfDistance;
        uint64_t best_pos = 0;
        int64_t bucket = -1;
        auto flush = [&] {
            if (bucket >= 0 && best <= d_limit)
                out.push_back({best_pos, dir, best});
            best = kInfDistance;
        };
        for (uint64_t p = 0; p < g.size(); ++p) {
            int64_t b = static_cast<int64_t>(p) / bucket_size;
            if (b != bucket) {
                flush();
                bucket = b;
            }
            int d = full_dp_distance(r, g.substring(p, r.size() + d_limit));
            if (d < best) {
                best = d;
                best_pos = p;
            }
        }
        flush();
    }
    std::sort(out.begin(), out.end(), [](const OracleHit& a, const OracleHit& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.position != b.position) return a.position < b.position;
        return static_cast<int>(a.direction) < static_cast<int>(b.direction);
    });
    return out;
}

}  // namespace

TEST_CASE("scoring against truth") {
    Truth t{"c1", 500, Direction::Forward, 0};
    CHECK(score_alignment(ResultKind::SingleHit, "c1", 503, Direction::Forward,
                          t, 50) == ScoreKind::Correct);
    CHECK(score_alignment(ResultKind::SingleHit, "c2", 500, Direction::Forward,
                          t, 50) == ScoreKind::Wrong);
    CHECK(score_alignment(ResultKind::SingleHit, "c1", 600, Direction::Forward,
                          t, 50) == ScoreKind::Wrong);
    CHECK(score_alignment(ResultKind::SingleHit, "c1", 500,
                          Direction::ReverseComplement, t, 50) ==
          ScoreKind::Wrong);
    CHECK(score_alignment(ResultKind::MultipleHits, "c1", 500,
                          Direction::Forward, t, 50) == ScoreKind::NotConfident);
    CHECK(score_alignment(ResultKind::NotFound, "", 0, Direction::Forward, t,
                          50) == ScoreKind::NotConfident);
}

TEST_CASE("report arithmetic") {
    EvalReport r;
    r.total = 1000000;
    r.single = 920000;
    r.multiple = 50000;
    r.notfound = 30000;
    r.wrong = 460;
    r.correct = 920000 - 460;
    CHECK(r.aligned_percent() == doctest::Approx(92.0).epsilon(1e-12));
    CHECK(r.error_percent() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(r.single + r.multiple + r.notfound == r.total);

    EvalReport none;
    none.total = 10;
    none.notfound = 10;
    CHECK(!none.error_defined());
    CHECK(none.to_text().find("error_pct=na") != std::string::npos);
}

TEST_CASE("report accumulation keeps the fractions consistent") {
    std::mt19937_64 rng(41);
    EvalReport r;
    for (int i = 0; i < 5000; ++i) {
        ResultKind kind = static_cast<ResultKind>(rng() % 3);
        std::optional<ScoreKind> score;
        if (rng() % 4 != 0) {
            score = kind == ResultKind::SingleHit
                        ? (rng() % 10 ? ScoreKind::Correct : ScoreKind::Wrong)
                        : ScoreKind::NotConfident;
        }
        r.add(kind, score);
    }
    CHECK(r.single + r.multiple + r.notfound == r.total);
    CHECK(r.correct + r.wrong + r.no_truth <= r.total);
    double pct_sum = r.aligned_percent() +
                     100.0 * static_cast<double>(r.multiple) / r.total +
                     100.0 * static_cast<double>(r.notfound) / r.total;
    CHECK(pct_sum == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("referee scan matches a brute-force full-table scan") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        std::string seq = random_bases(rng, 800 + rng() % 1200);
        if (trial % 3 == 0) seq += seq.substr(17, 300);  // duplication
        PackedGenome g = PackedGenome::from_contigs({{"c1", seq}});
        OracleContext ctx(g);

        uint64_t pos = rng() % (seq.size() - 72);
        std::string bases = seq.substr(pos, 72);
        for (int e = 0; e < static_cast<int>(rng() % 4); ++e) {
            size_t i = rng() % bases.size();
            bases[i] = "ACGT"[rng() % 4];
        }
        if (rng() & 1) bases = reverse_complement(bases);
        Read read = make_read(bases);

        for (int d_limit : {0, 2, 5}) {
            auto fast = oracle_scan(read, ctx, d_limit, 32);
            auto slow = brute_scan(read, g, d_limit, 32);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast[i].position == slow[i].position);
                CHECK(fast[i].direction == slow[i].direction);
                CHECK(fast[i].distance == slow[i].distance);
            }
        }
    }
}

TEST_CASE("referee classification on planted cases") {
    std::mt19937_64 rng(43);
    std::string seq = random_bases(rng, 6000);
    std::string dup = random_bases(rng, 80);
    seq += dup + random_bases(rng, 500) + dup + random_bases(rng, 200);
    PackedGenome g = PackedGenome::from_contigs({{"c1", seq}});
    OracleContext ctx(g);
    AlignerParams params;
    params.seed_size = 20;

    // unique exact read
    Read unique = make_read(seq.substr(1234, 80));
    AlignmentResult r = oracle_align(unique, ctx, params);
    CHECK(r.kind == ResultKind::SingleHit);
    CHECK(r.position == 1234);
    CHECK(r.distance == 0);

    // duplicated locus
    AlignmentResult dup_r = oracle_align(make_read(dup), ctx, params);
    CHECK(dup_r.kind == ResultKind::MultipleHits);

    // nothing anywhere near
    AlignmentResult nf = oracle_align(make_read(random_bases(rng, 80)), ctx, params);
    CHECK(nf.kind == ResultKind::NotFound);
}

TEST_CASE("staged referee equals the single-stage referee") {
    std::mt19937_64 rng(44);
    std::string seq = random_bases(rng, 4000);
    seq += seq.substr(100, 400);
    PackedGenome g = PackedGenome::from_contigs({{"c1", seq}});
    OracleContext ctx(g);
    AlignerParams params;

    for (int trial = 0; trial < 40; ++trial) {
        uint64_t pos = rng() % (seq.size() - 100);
        std::string bases = seq.substr(pos, 100);
        for (int e = 0; e < static_cast<int>(rng() % 10); ++e) {
            size_t i = rng() % bases.size();
            bases[i] = "ACGT"[rng() % 4];
        }
        Read read = make_read(bases);
        AlignmentResult staged = oracle_align(read, ctx, params);

        int d_max = params.effective_max_distance(100);
        int dl = d_max + params.confidence_threshold - 1;
        auto hits = oracle_scan(read, ctx, dl, params.bucket_size);
        BestTracker tracker(params.bucket_size);
        for (const auto& h : hits)
            tracker.observe(h.distance, h.position, h.direction);
        ResultKind want = classify_confidence(
            tracker.d_best(), tracker.d_second(), d_max,
            params.confidence_threshold);
        CHECK(staged.kind == want);
        if (want == ResultKind::SingleHit) {
            CHECK(staged.position == tracker.best_position());
            CHECK(staged.distance == tracker.d_best());
        }
    }
}
