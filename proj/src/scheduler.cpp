#include "seedaln/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace seedaln {

uint64_t next_chunk(uint64_t remaining_work, unsigned workers,
                    uint64_t min_chunk) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (min_chunk < 1) throw std::invalid_argument("min_chunk must be >= 1");
    uint64_t size = remaining_work / (2 * static_cast<uint64_t>(workers));
    size = std::max(size, min_chunk);
    return std::min(size, remaining_work);
}

ChunkScheduler::ChunkScheduler(uint64_t total, unsigned workers,
                               uint64_t min_chunk)
    : total_(total), workers_(workers), min_chunk_(min_chunk) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (min_chunk < 1) throw std::invalid_argument("min_chunk must be >= 1");
}

std::optional<WorkChunk> ChunkScheduler::next() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (cursor_ >= total_) return std::nullopt;
    uint64_t size = next_chunk(total_ - cursor_, workers_, min_chunk_);
    WorkChunk chunk{cursor_, cursor_ + size};
    cursor_ += size;
    return chunk;
}

}  // namespace seedaln
