#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "seedaln/edit_distance.hpp"

using namespace seedaln;

namespace {

std::string random_bases(std::mt19937_64& rng, size_t len) {
    static const char acgt[] = "ACGT";
    std::string s;
    s.reserve(len);
    for (size_t i = 0; i < len; ++i) s += acgt[rng() % 4];
    return s;
}

// copy of `s` with `edits` random substitutions/insertions/deletions
std::string inject_edits(std::mt19937_64& rng, std::string s, int edits) {
    static const char acgt[] = "ACGT";
    for (int e = 0; e < edits && !s.empty(); ++e) {
        size_t i = rng() % s.size();
        switch (rng() % 3) {
            case 0: s[i] = acgt[rng() % 4]; break;
            case 1: s.insert(s.begin() + i, acgt[rng() % 4]); break;
            case 2: s.erase(s.begin() + i); break;
        }
    }
    return s;
}

}  // namespace

TEST_CASE("bounded distance basics") {
    CHECK(bounded_distance("ACGT", "ACGTAA", 2) == 0);
    CHECK(bounded_distance("ACGT", "AGGTAA", 2) == 1);
    // one deletion relative to the read, confirmed by the full table
    CHECK(full_dp_distance("ACGTACGT", "ACGACGTCCC") == 1);
    CHECK(bounded_distance("ACGTACGT", "ACGACGTCCC", 2) == 1);
    CHECK(bounded_distance("AAAA", "TTTTTT", 2) == std::nullopt);
    CHECK_THROWS_AS(bounded_distance("A", "A", -1), std::invalid_argument);
}

TEST_CASE("full DP basics") {
    CHECK(full_dp_distance("ACGT", "ACGT") == 0);
    CHECK(full_dp_distance("ACGT", "TGCA") == 3);
    CHECK(full_dp_distance("A", "G") == 1);
}

TEST_CASE("window end is free") {
    // distance is the minimum over window prefixes
    CHECK(full_dp_distance("AC", "ACGTGT") == 0);
    CHECK(bounded_distance("AC", "ACGTGT", 3) == 0);
    // window shorter than the read: missing bases cost edits
    CHECK(full_dp_distance("ACGT", "AC") == 2);
    CHECK(bounded_distance("ACGT", "AC", 3) == 2);
    CHECK(bounded_distance("ACGT", "", 4) == 4);
}

TEST_CASE("N never matches") {
    CHECK(full_dp_distance("AN", "AN") == 1);
    CHECK(bounded_distance("AN", "AN", 2) == 1);
    CHECK(bounded_distance("ANNA", "AGGA", 4) == 2);
    CHECK(bounded_distance("ACGT", "ACGN", 2) == 1);
}

TEST_CASE("oracle equivalence on random pairs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 4000; ++trial) {
        size_t len = 1 + rng() % 64;
        std::string read = random_bases(rng, len);
        std::string window;
        if (rng() % 4 == 0) {
            window = random_bases(rng, len + rng() % 14);
        } else {
            window = inject_edits(rng, read, static_cast<int>(rng() % 11));
            window += random_bases(rng, rng() % 14);
        }
        if (rng() % 8 == 0 && !window.empty()) window[rng() % window.size()] = 'N';

        int exact = full_dp_distance(read, window.substr(0, len + 12));
        for (int d_limit : {0, 1, 2, 3, 5, 8, 12}) {
            DistanceOutcome out =
                bounded_distance(read, window.substr(0, len + d_limit), d_limit);
            // the window carries exactly d_limit slack, so compare against
            // the same-window exact distance
            int exact_here =
                full_dp_distance(read, window.substr(0, len + d_limit));
            if (exact_here <= d_limit) {
                REQUIRE(out.has_value());
                CHECK(*out == exact_here);
            } else {
                CHECK(!out.has_value());
            }
            if (out && d_limit == 12) CHECK(*out == exact);
        }
    }
}

TEST_CASE("monotonicity in the distance limit") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        size_t len = 8 + rng() % 48;
        std::string read = random_bases(rng, len);
        std::string reference =
            inject_edits(rng, read, static_cast<int>(rng() % 6)) +
            random_bases(rng, 20);
        int found = -1;
        for (int d_limit = 0; d_limit <= 12; ++d_limit) {
            DistanceOutcome out =
                bounded_distance(read, reference.substr(0, len + d_limit), d_limit);
            if (found >= 0) {
                REQUIRE(out.has_value());
                CHECK(*out == found);
            } else if (out) {
                found = *out;
            }
        }
    }
}

TEST_CASE("work is proportional to read length times distance") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 300; ++trial) {
        size_t len = 16 + rng() % 128;
        std::string read = random_bases(rng, len);
        int edits = static_cast<int>(rng() % 9);
        std::string window = inject_edits(rng, read, edits) + random_bases(rng, 16);
        int d_limit = static_cast<int>(rng() % 14);
        uint64_t cells = 0;
        DistanceOutcome out =
            bounded_distance(read, window.substr(0, len + d_limit), d_limit, &cells);
        uint64_t budget = out ? static_cast<uint64_t>(*out) + 1
                              : static_cast<uint64_t>(d_limit) + 1;
        CHECK(cells <= 6 * (len + 1) * budget + 16);
    }
}
