#include <doctest.h>

#include <mutex>
#include <thread>
#include <vector>

#include "seedaln/scheduler.hpp"

using namespace seedaln;

TEST_CASE("chunk sizing rule") {
    CHECK(next_chunk(1000, 4, 10) == 125);
    CHECK(next_chunk(8, 4, 10) == 8);  // capped at what remains
    CHECK(next_chunk(1000, 1, 10) == 500);
    CHECK(next_chunk(50, 4, 10) == 10);  // floor at min_chunk
    CHECK(next_chunk(0, 4, 10) == 0);
    CHECK_THROWS_AS(next_chunk(10, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(next_chunk(10, 1, 0), std::invalid_argument);
}

TEST_CASE("scheduler tiles the input exactly") {
    ChunkScheduler sched(100000, 4, 7);
    uint64_t expected_begin = 0;
    std::vector<WorkChunk> chunks;
    while (auto c = sched.next()) {
        CHECK(c->begin == expected_begin);
        CHECK(c->end > c->begin);
        expected_begin = c->end;
        chunks.push_back(*c);
    }
    CHECK(expected_begin == 100000);
    // min chunk honored except possibly for the final remainder
    for (size_t i = 0; i + 1 < chunks.size(); ++i)
        CHECK(chunks[i].end - chunks[i].begin >= 7);
    // sizes shrink toward the tail
    CHECK(chunks.front().end - chunks.front().begin >
          chunks.back().end - chunks.back().begin);
}

TEST_CASE("concurrent pulls neither skip nor repeat work") {
    ChunkScheduler sched(1 << 20, 8, 64);
    std::mutex m;
    std::vector<WorkChunk> all;
    auto puller = [&] {
        while (auto c = sched.next()) {
            std::lock_guard<std::mutex> lock(m);
            all.push_back(*c);
        }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) threads.emplace_back(puller);
    for (auto& t : threads) t.join();

    std::sort(all.begin(), all.end(),
              [](auto& a, auto& b) { return a.begin < b.begin; });
    uint64_t at = 0;
    for (const WorkChunk& c : all) {
        CHECK(c.begin == at);
        at = c.end;
    }
    CHECK(at == (1 << 20));
}
