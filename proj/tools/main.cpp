// seedaln: seed-and-extend read aligner with an overlapping-seed hash
// index, a threshold-bounded edit-distance kernel, a read simulator and
// an evaluation harness.

#include <CLI11.hpp>
#include <iostream>

#include "seedaln/driver.hpp"
#include "seedaln/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kFormat = 3 };

std::string joined_command_line(int argc, char** argv) {
    std::string cl;
    for (int i = 0; i < argc; ++i) {
        if (i) cl += ' ';
        cl += argv[i];
    }
    return cl;
}

void add_param_flags(CLI::App* cmd, seedaln::AlignerParams& p) {
    cmd->add_option("--seed-size", p.seed_size, "Seed length in bases (s)")
        ->check(CLI::Range(1, 32));
    cmd->add_option("--seeds-to-try", p.seeds_to_try,
                    "Seeds drawn per read (n)");
    cmd->add_option("--max-dist", p.max_distance,
                    "Maximum edit distance; -1 = ceil(0.12 * read length)");
    cmd->add_option("--confidence", p.confidence_threshold,
                    "Best/second-best gap required for a unique hit (c)");
    cmd->add_option("--max-hits", p.max_hits,
                    "Skip seeds with more index hits than this (h_max)");
    cmd->add_option("--bucket-size", p.bucket_size,
                    "Width of merged candidate-position buckets");
    cmd->add_flag("--force-max-dlimit", p.force_max_dlimit,
                  "Instrumentation: score every candidate at the maximum "
                  "distance limit instead of shrinking it");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seed-and-extend nucleotide read aligner"};
    app.require_subcommand(1);

    // index
    seedaln::IndexOptions index_opt;
    CLI::App* index_cmd =
        app.add_subcommand("index", "Build a seed index from FASTA");
    index_cmd->add_option("fasta", index_opt.fasta_path, "Reference FASTA")
        ->required();
    index_cmd->add_option("-o,--output", index_opt.index_path, "Index file")
        ->required();
    index_cmd->add_option("--seed-size", index_opt.seed_size,
                          "Seed length in bases (s)")
        ->check(CLI::Range(1, 32));

    // align
    seedaln::AlignOptions align_opt;
    CLI::App* align_cmd =
        app.add_subcommand("align", "Align FASTQ reads against an index");
    align_cmd->add_option("index", align_opt.index_path, "Index file")
        ->required();
    align_cmd->add_option("fastq", align_opt.fastq_path, "Reads (FASTQ)")
        ->required();
    align_cmd->add_option("-o,--output", align_opt.output_path, "SAM output")
        ->required();
    add_param_flags(align_cmd, align_opt.params);
    align_cmd->add_option("--threads", align_opt.threads,
                          "Worker threads; 0 = all cores");
    align_cmd->add_option("--chunk-min", align_opt.chunk_min_bytes,
                          "Minimum scheduler chunk in bytes");
    align_cmd->add_flag("--stable-order", align_opt.stable_order,
                        "Write records in input order");
    align_cmd->add_option("--tolerance", align_opt.tolerance,
                          "Truth-scoring window in bases");
    align_cmd->add_option("--report", align_opt.report_path,
                          "Write key=value run metrics to this file");

    // simulate
    seedaln::SimulateOptions sim_opt;
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Generate reads with truth-encoded names");
    sim_cmd->add_option("fasta", sim_opt.fasta_path, "Reference FASTA")
        ->required();
    sim_cmd->add_option("-o,--output", sim_opt.output_path, "FASTQ output")
        ->required();
    sim_cmd->add_option("-n,--count", sim_opt.count, "Number of reads")
        ->required();
    sim_cmd->add_option("--read-length", sim_opt.profile.read_length,
                        "Read length in bases");
    sim_cmd->add_option("--snp-rate", sim_opt.profile.snp_rate,
                        "Per-base SNP mutation rate");
    sim_cmd->add_option("--indel-rate", sim_opt.profile.indel_mutation_rate,
                        "Per-base indel mutation rate");
    sim_cmd->add_option("--error-rate", sim_opt.profile.seq_error_rate,
                        "Per-base sequencing error rate");
    sim_cmd->add_option("--indel-error-fraction",
                        sim_opt.profile.indel_error_fraction,
                        "Fraction of sequencing errors that are indels");
    sim_cmd->add_option("--rng-seed", sim_opt.profile.rng_seed, "RNG seed");

    // eval
    seedaln::EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Score aligner SAM output against truth-encoded names");
    eval_cmd->add_option("sam", eval_opt.sam_path, "SAM file from align")
        ->required();
    eval_cmd->add_option("--tolerance", eval_opt.tolerance,
                         "Truth-scoring window in bases");
    eval_cmd->add_option("--seconds", eval_opt.elapsed_seconds,
                         "Wall-clock seconds of the align run, for the "
                         "throughput field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (index_cmd->parsed()) {
            seedaln::run_index(index_opt);
        } else if (align_cmd->parsed()) {
            align_opt.command_line = joined_command_line(argc, argv);
            align_opt.params.validate();
            seedaln::EvalReport report = seedaln::run_align(align_opt);
            std::cerr << report.to_text();
        } else if (sim_cmd->parsed()) {
            seedaln::run_simulate(sim_opt);
        } else if (eval_cmd->parsed()) {
            seedaln::EvalReport report = seedaln::run_eval(eval_opt);
            std::cout << report.to_text();
        }
    } catch (const seedaln::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const seedaln::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const seedaln::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
