#pragma once

#include <cstdint>
#include <string>

#include "seedaln/aligner.hpp"
#include "seedaln/eval.hpp"
#include "seedaln/simulator.hpp"

namespace seedaln {

struct IndexOptions {
    std::string fasta_path;
    std::string index_path;
    int seed_size = 20;
};

/// Builds the seed index from a FASTA reference and writes the index
/// file (genome embedded).
void run_index(const IndexOptions& opt);

struct AlignOptions {
    std::string index_path;
    std::string fastq_path;
    std::string output_path;  // SAM
    AlignerParams params;
    unsigned threads = 1;     // 0 selects hardware concurrency
    uint64_t chunk_min_bytes = 4ull << 20;
    bool stable_order = false;
    uint64_t tolerance = 50;  // truth-scoring window, bases
    std::string report_path;  // optional key=value metrics file
    std::string command_line = "seedaln align";
};

/// Aligns a FASTQ file against an index: one SAM record per input read,
/// dynamic chunk scheduling across threads, classifications independent
/// of the thread count. Output follows chunk completion order unless
/// stable_order is set. Returns the run metrics (truth scored from
/// read names where present).
EvalReport run_align(const AlignOptions& opt);

struct SimulateOptions {
    std::string fasta_path;
    std::string output_path;  // FASTQ
    SimProfile profile;
    uint64_t count = 0;
};

void run_simulate(const SimulateOptions& opt);

struct EvalOptions {
    std::string sam_path;
    uint64_t tolerance = 50;
    double elapsed_seconds = 0;  // optional, for the throughput field
};

/// Recomputes the metrics from a SAM file produced by run_align,
/// scoring against the truth encoded in read names.
EvalReport run_eval(const EvalOptions& opt);

}  // namespace seedaln
