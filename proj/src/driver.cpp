#include "seedaln/driver.hpp"

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "seedaln/errors.hpp"
#include "seedaln/fastq.hpp"
#include "seedaln/sam.hpp"
#include "seedaln/scheduler.hpp"
#include "seedaln/seed_index.hpp"

namespace seedaln {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

void run_index(const IndexOptions& opt) {
    std::ifstream in = open_input(opt.fasta_path);
    PackedGenome g = PackedGenome::from_fasta(in);
    SeedIndex idx = SeedIndex::build(g, opt.seed_size);
    std::ofstream out = open_output(opt.index_path);
    save_index_file(idx, g, out);
    out.flush();
    if (!out) throw IoError("failed writing " + opt.index_path);
}

EvalReport run_align(const AlignOptions& opt) {
    opt.params.validate();

    std::ifstream index_in = open_input(opt.index_path);
    auto [idx, genome] = load_index_file(index_in);
    if (idx.seed_size() != opt.params.seed_size)
        throw FormatError("index was built with seed size " +
                          std::to_string(idx.seed_size()) +
                          ", but --seed-size is " +
                          std::to_string(opt.params.seed_size));

    std::error_code ec;
    uint64_t file_size = std::filesystem::file_size(opt.fastq_path, ec);
    if (ec) throw IoError("cannot stat " + opt.fastq_path);
    {
        std::ifstream probe = open_input(opt.fastq_path);
        if (file_size > 0 &&
            find_fastq_record_start(probe, 0, file_size) != 0)
            throw ParseError(
                opt.fastq_path + " does not start with a FASTQ record", 0);
    }

    std::ofstream out = open_output(opt.output_path);
    out << sam_header(genome, opt.command_line);

    unsigned workers = opt.threads != 0
                           ? opt.threads
                           : std::max(1u, std::thread::hardware_concurrency());

    ChunkScheduler scheduler(file_size, workers, opt.chunk_min_bytes);

    std::mutex out_mutex;
    std::map<uint64_t, std::pair<uint64_t, std::string>> pending;
    uint64_t next_expected = 0;
    auto emit = [&](uint64_t begin, uint64_t end, std::string buf) {
        std::lock_guard<std::mutex> lock(out_mutex);
        if (!opt.stable_order) {
            out << buf;
            return;
        }
        pending.emplace(begin, std::make_pair(end, std::move(buf)));
        while (!pending.empty() && pending.begin()->first == next_expected) {
            out << pending.begin()->second.second;
            next_expected = pending.begin()->second.first;
            pending.erase(pending.begin());
        }
    };

    std::mutex report_mutex;
    EvalReport report;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        try {
            std::ifstream in = open_input(opt.fastq_path);
            Aligner aligner(idx, genome, opt.params);
            EvalReport local;
            while (auto chunk = scheduler.next()) {
                std::string buf;
                uint64_t start =
                    find_fastq_record_start(in, chunk->begin, file_size);
                if (start < chunk->end) {
                    FastqReader reader(in, start);
                    while (reader.offset() < chunk->end) {
                        std::optional<Read> read = reader.next();
                        if (!read) break;
                        AlignmentResult res = aligner.align(*read);
                        std::optional<ScoreKind> score;
                        if (auto truth = decode_truth(read->name))
                            score = score_result(res, *truth, opt.tolerance,
                                                 genome);
                        local.add(res.kind, score);
                        buf += format_sam_record(
                            make_sam_record(res, *read, genome));
                    }
                }
                emit(chunk->begin, chunk->end, std::move(buf));
            }
            local.stats = aligner.stats();
            std::lock_guard<std::mutex> lock(report_mutex);
            report.merge(local);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    auto t0 = std::chrono::steady_clock::now();
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_seconds =
        std::chrono::duration<double>(t1 - t0).count();

    out.flush();
    if (!out) throw IoError("failed writing " + opt.output_path);

    if (!opt.report_path.empty()) {
        std::ofstream rep = open_output(opt.report_path);
        rep << report.to_text();
    }
    return report;
}

void run_simulate(const SimulateOptions& opt) {
    if (opt.count < 1) throw std::invalid_argument("read count must be >= 1");
    std::ifstream in = open_input(opt.fasta_path);
    PackedGenome g = PackedGenome::from_fasta(in);
    ReadSimulator sim(g, opt.profile);
    std::ofstream out = open_output(opt.output_path);
    for (uint64_t i = 0; i < opt.count; ++i)
        out << to_fastq(sim.next().read);
    out.flush();
    if (!out) throw IoError("failed writing " + opt.output_path);
}

EvalReport run_eval(const EvalOptions& opt) {
    std::ifstream in = open_input(opt.sam_path);
    EvalReport report;
    report.elapsed_seconds = opt.elapsed_seconds;

    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '@') continue;
        SamLine rec;
        try {
            rec = parse_sam_line(line);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        }

        ResultKind kind;
        switch (rec.result_kind) {
            case 'S': kind = ResultKind::SingleHit; break;
            case 'M': kind = ResultKind::MultipleHits; break;
            case 'N': kind = ResultKind::NotFound; break;
            default:
                // no XR tag: fall back to flag/MAPQ conventions
                if (rec.flag & kSamFlagUnmapped) kind = ResultKind::NotFound;
                else if (rec.mapq > 0) kind = ResultKind::SingleHit;
                else kind = ResultKind::MultipleHits;
        }

        std::optional<ScoreKind> score;
        if (auto truth = decode_truth(rec.qname)) {
            Direction dir = (rec.flag & kSamFlagReverse)
                                ? Direction::ReverseComplement
                                : Direction::Forward;
            uint64_t pos0 = rec.pos > 0 ? rec.pos - 1 : 0;
            score = score_alignment(kind, rec.rname, pos0, dir, *truth,
                                    opt.tolerance);
        }
        report.add(kind, score);
    }
    if (report.total == 0)
        throw FormatError("no alignment records in " + opt.sam_path);
    return report;
}

}  // namespace seedaln
