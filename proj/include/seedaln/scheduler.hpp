#pragma once

#include <cstdint>
#include <mutex>
#include <optional>

namespace seedaln {

/// Half-open byte range of the input assigned to one worker.
struct WorkChunk {
    uint64_t begin = 0;
    uint64_t end = 0;
    bool operator==(const WorkChunk&) const = default;
};

/// Next chunk size: half the remaining work divided by the worker count,
/// floored at min_chunk, capped at what remains. Large early chunks
/// amortize per-chunk overhead; shrinking tails let workers finish
/// together.
uint64_t next_chunk(uint64_t remaining_work, unsigned workers,
                    uint64_t min_chunk);

/// Thread-safe monotone cursor handing out chunks that tile [0, total).
class ChunkScheduler {
public:
    ChunkScheduler(uint64_t total, unsigned workers, uint64_t min_chunk);

    std::optional<WorkChunk> next();

private:
    std::mutex mutex_;
    uint64_t total_;
    uint64_t cursor_ = 0;
    unsigned workers_;
    uint64_t min_chunk_;
};

}  // namespace seedaln
