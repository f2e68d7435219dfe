// Copyright 2026 The ocgec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ocgec/cli.hpp"

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "ocgec/error.hpp"
#include "ocgec/gec_scorer.hpp"
#include "ocgec/gold_merge.hpp"
#include "ocgec/kfold_builder.hpp"
#include "ocgec/lm_scoring.hpp"
#include "ocgec/m2_io.hpp"
#include "ocgec/text_io.hpp"
#include "ocgec/training_format.hpp"

namespace ocgec::cli {
namespace {

namespace fs = std::filesystem;

// ---- stages shared by the subcommands and the pipeline ----

std::string align_corpus(const std::vector<ParallelExample>& corpus) {
  std::vector<M2Entry> entries;
  entries.reserve(corpus.size());
  for (const ParallelExample& ex : corpus) {
    M2Entry e{ex.source, {}};
    for (std::size_t r = 0; r < ex.references.size(); ++r) {
      e.annotations.emplace(static_cast<AnnotatorId>(r), extract_edits(ex.source, ex.references[r]));
    }
    entries.push_back(std::move(e));
  }
  return write_m2(entries);
}

const EditSet& annotation_at(const M2Entry& entry, std::size_t position, std::size_t entry_no) {
  if (position >= entry.annotations.size()) {
    throw ConfigError("M2 entry " + std::to_string(entry_no) + " has no annotator at position " +
                      std::to_string(position));
  }
  return std::next(entry.annotations.begin(), static_cast<std::ptrdiff_t>(position))->second;
}

std::string apply_m2(const std::vector<M2Entry>& entries, std::size_t annotator_position) {
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.push_back(apply_edits(entries[i].source, annotation_at(entries[i], annotator_position, i + 1)));
  }
  return write_sentences(out);
}

std::string serialize_triples(const std::vector<CandidateTriple>& triples, bool with_candidate) {
  std::string out;
  for (const CandidateTriple& t : triples) {
    out += serialize_training_example(
        t.source, with_candidate ? std::optional<Sentence>(t.candidate) : std::nullopt, t.gold);
    out.push_back('\n');
  }
  return out;
}

struct FilterRun {
  std::string text;
  std::size_t beam_fallbacks = 0;
};

FilterRun filter_lines(const std::vector<Sentence>& sources, const std::vector<Sentence>& hyps,
                       const LMScorer& scorer, Granularity g, const FilterOptions& opts) {
  if (sources.size() != hyps.size()) {
    throw MismatchError("source has " + std::to_string(sources.size()) +
                        " lines but hypothesis has " + std::to_string(hyps.size()));
  }
  std::vector<Sentence> out;
  FilterRun run;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    FilterResult r = apply_filter(g, sources[i], hyps[i], scorer, opts);
    if (r.beam_search_used) ++run.beam_fallbacks;
    out.push_back(std::move(r.output));
  }
  run.text = write_sentences(out);
  return run;
}

std::unique_ptr<LMScorer> make_scorer(const PipelineConfig& cfg) {
  if (cfg.scorer_type == "process") {
    if (cfg.scorer_command.empty()) throw ConfigError("scorer.command is required for a process scorer");
    return std::make_unique<ProcessScorer>(cfg.scorer_command);
  }
  if (cfg.scorer_model.empty()) throw ConfigError("no n-gram model given (--model or scorer.model)");
  return std::make_unique<CharNgramLM>(CharNgramLM::load(read_file(cfg.scorer_model)));
}

void emit(const std::string& output, std::string_view content) {
  if (output.empty() || output == "-") {
    std::cout << content;
  } else {
    write_file(output, content);
  }
}

void report_beam(std::size_t n) {
  if (n > 0) {
    std::cerr << "note: " << n << " sentence(s) exceeded max_exhaustive and used beam search\n";
  }
}

std::vector<ParallelExample> zip_columns(const fs::path& source,
                                         const std::vector<std::string>& targets) {
  const std::vector<Sentence> src = parse_sentences(read_file(source));
  std::vector<ParallelExample> corpus(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) corpus[i].source = src[i];
  for (const std::string& t : targets) {
    const std::vector<Sentence> col = parse_sentences(read_file(t));
    if (col.size() != src.size()) {
      throw MismatchError(t + " has " + std::to_string(col.size()) + " lines, expected " +
                          std::to_string(src.size()));
    }
    for (std::size_t i = 0; i < src.size(); ++i) corpus[i].references.push_back(col[i]);
  }
  return corpus;
}

}  // namespace

std::map<std::string, fs::path> run_pipeline(const PipelineConfig& cfg) {
  std::map<std::string, fs::path> written;
  fs::create_directories(cfg.output_dir);
  auto put = [&](const std::string& role, const std::string& file, std::string_view content) {
    const fs::path p = cfg.output_dir / file;
    write_file(p, content);
    written[role] = p;
  };

  if (cfg.train_corpus.empty()) throw ConfigError("corpus.train is required");
  const std::vector<ParallelExample> corpus = parse_parallel_tsv(read_file(cfg.train_corpus));
  std::cerr << "kfold-build: " << corpus.size() << " examples, k=" << cfg.k << "\n";
  const CorrectorHandle handle{cfg.corrector_train, cfg.corrector_infer, cfg.output_dir / "kfold_work"};
  const auto triples = cross_infer(corpus, {cfg.k, cfg.seed, cfg.gold_index, cfg.jobs}, handle);
  put("triples", "triples.jsonl", write_triples_jsonl(triples));
  put("train_text", "train.txt", serialize_triples(triples, true));

  PipelineConfig scoring = cfg;
  if (cfg.scorer_type == "ngram" && cfg.scorer_model.empty()) {
    if (cfg.scorer_train_text.empty()) throw ConfigError("scorer.train_text or scorer.model is required");
    const auto lm = CharNgramLM::train(parse_sentences(read_file(cfg.scorer_train_text)), cfg.order,
                                       cfg.smooth_k);
    put("lm_model", "lm.model", lm.save());
    scoring.scorer_model = written["lm_model"];
  }

  if (cfg.eval_source.empty() || cfg.eval_hypothesis.empty()) return written;
  const auto scorer = make_scorer(scoring);
  const auto sources = parse_sentences(read_file(cfg.eval_source));
  const auto hyps = parse_sentences(read_file(cfg.eval_hypothesis));
  std::cerr << "filter: " << sources.size() << " sentences, granularity "
            << granularity_name(cfg.granularity) << "\n";
  const FilterRun filtered = filter_lines(sources, hyps, *scorer, cfg.granularity, cfg.filter);
  report_beam(filtered.beam_fallbacks);
  put("filtered", "filtered.txt", filtered.text);

  if (cfg.eval_references.empty()) return written;
  put("hyp_m2", "hyp.m2", align_corpus(zip_columns(cfg.eval_source, {cfg.eval_hypothesis.string()})));
  put("filtered_m2", "filtered.m2",
      align_corpus(zip_columns(cfg.eval_source, {written["filtered"].string()})));
  put("ref_m2", "ref.m2", align_corpus(parse_parallel_tsv(read_file(cfg.eval_references))));
  const auto ref = parse_m2(read_file(written["ref_m2"]));
  const auto sys_report = score_m2(parse_m2(read_file(written["hyp_m2"])), ref);
  const auto filt_report = score_m2(parse_m2(read_file(written["filtered_m2"])), ref);
  put("score_system", "score_system.json", report_json(sys_report) + "\n");
  put("score_filtered", "score_filtered.json", report_json(filt_report) + "\n");
  std::cerr << "system:\n" << report_table(sys_report) << "filtered:\n" << report_table(filt_report);
  return written;
}

int run(int argc, char** argv) {
  CLI::App app{"Over-correction data construction, filtering and scoring for GEC"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k, max_exhaustive, beam_width, gold_index;
  std::optional<std::string> granularity;
  std::string output;
  app.add_option("--config", config_path, "Pipeline configuration (INI)")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Fold shuffling seed");
  app.add_option("--k", k, "Number of folds");
  app.add_option("--granularity", granularity, "sentence | edit | combination");
  app.add_option("--max-exhaustive", max_exhaustive, "Largest edit count searched exhaustively");
  app.add_option("--beam-width", beam_width, "Beam width above --max-exhaustive");
  app.add_option("--gold-index", gold_index, "Reference used as merging gold");
  app.add_option("--output", output, "Output file (default stdout); output directory for pipeline");

  auto* align = app.add_subcommand("align", "Parallel text to M2");
  std::string align_input, align_source;
  std::vector<std::string> align_targets;
  auto* align_in = align->add_option("--input", align_input, "TSV: source TAB ref1 [TAB ref2 ...]")
                       ->check(CLI::ExistingFile);
  auto* align_src = align->add_option("--source", align_source, "One source per line")
                        ->check(CLI::ExistingFile);
  align->add_option("--target", align_targets, "One corrected sentence per line (repeatable)")
      ->check(CLI::ExistingFile)
      ->needs(align_src);
  align_in->excludes(align_src);

  auto* apply = app.add_subcommand("apply", "Apply M2 edits to their sources");
  std::string apply_m2_path, apply_source;
  std::size_t apply_annotator = 0;
  apply->add_option("--m2", apply_m2_path)->required()->check(CLI::ExistingFile);
  apply->add_option("--source", apply_source, "Check sources against this file")
      ->check(CLI::ExistingFile);
  apply->add_option("--annotator", apply_annotator, "Annotator position within each entry");

  auto* merge = app.add_subcommand("merge-gold", "Merge system edits with gold edits");
  std::string merge_system, merge_gold, merge_candidates;
  merge->add_option("--system", merge_system, "System M2")->required()->check(CLI::ExistingFile);
  merge->add_option("--gold", merge_gold, "Gold M2")->required()->check(CLI::ExistingFile);
  merge->add_option("--candidates", merge_candidates, "Write candidate sentences here");

  auto* kfold = app.add_subcommand("kfold-build", "K-fold cross inference");
  std::string kfold_corpus, kfold_work, train_cmd, infer_cmd;
  std::size_t jobs = 0;
  kfold->add_option("--corpus", kfold_corpus, "Parallel TSV")->check(CLI::ExistingFile);
  kfold->add_option("--work-dir", kfold_work, "Per-fold scratch directory");
  kfold->add_option("--train-cmd", train_cmd, "Corrector train template");
  kfold->add_option("--infer-cmd", infer_cmd, "Corrector infer template");
  kfold->add_option("--jobs", jobs, "Concurrent folds (0 = k)");

  auto* serialize = app.add_subcommand("serialize", "Candidate triples to LM training text");
  std::string serialize_input;
  bool no_candidate = false;
  serialize->add_option("--input", serialize_input, "Triples JSONL")->required()->check(CLI::ExistingFile);
  serialize->add_flag("--no-candidate", no_candidate, "Emit <sos>src<sep>tgt lines");

  auto* train_lm = app.add_subcommand("train-lm", "Train a character n-gram model");
  std::string lm_input;
  int order = 3;
  double smooth_k = 0.1;
  train_lm->add_option("--input", lm_input, "One sentence per line")->required()->check(CLI::ExistingFile);
  train_lm->add_option("--order", order);
  train_lm->add_option("--smooth-k", smooth_k);

  auto* filter = app.add_subcommand("filter", "PPL-based over-correction filter");
  std::string filter_source, filter_hyp, filter_model, filter_cmd;
  filter->add_option("--source", filter_source)->required()->check(CLI::ExistingFile);
  filter->add_option("--hyp", filter_hyp)->required()->check(CLI::ExistingFile);
  filter->add_option("--model", filter_model, "n-gram model file")->check(CLI::ExistingFile);
  filter->add_option("--scorer-cmd", filter_cmd, "External scorer command");

  auto* score = app.add_subcommand("score", "Span-level P/R/F");
  std::string score_hyp, score_ref;
  double beta = 0.5;
  score->add_option("--hyp", score_hyp)->required()->check(CLI::ExistingFile);
  score->add_option("--ref", score_ref)->required()->check(CLI::ExistingFile);
  score->add_option("--beta", beta);

  auto* pipeline = app.add_subcommand("pipeline", "Config-driven end-to-end run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    PipelineConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (k) cfg.k = *k;
    if (gold_index) cfg.gold_index = *gold_index;
    if (granularity) cfg.granularity = parse_granularity(*granularity);
    if (max_exhaustive) cfg.filter.max_exhaustive = *max_exhaustive;
    if (beam_width) cfg.filter.beam_width = *beam_width;

    if (align->parsed()) {
      std::vector<ParallelExample> corpus;
      if (!align_input.empty()) {
        corpus = parse_parallel_tsv(read_file(align_input));
      } else if (!align_source.empty() && !align_targets.empty()) {
        corpus = zip_columns(align_source, align_targets);
      } else {
        throw ConfigError("align needs --input, or --source with at least one --target");
      }
      emit(output, align_corpus(corpus));
    } else if (apply->parsed()) {
      const auto entries = parse_m2(read_file(apply_m2_path));
      if (!apply_source.empty()) {
        const auto sources = parse_sentences(read_file(apply_source));
        if (sources.size() != entries.size()) throw MismatchError("source and M2 entry counts differ");
        for (std::size_t i = 0; i < sources.size(); ++i) {
          if (sources[i] != entries[i].source) {
            throw MismatchError("line " + std::to_string(i + 1) + " of " + apply_source +
                                " differs from the M2 source");
          }
        }
      }
      emit(output, apply_m2(entries, apply_annotator));
    } else if (merge->parsed()) {
      const auto system = parse_m2(read_file(merge_system));
      const auto gold = parse_m2(read_file(merge_gold));
      if (system.size() != gold.size()) throw MismatchError("system and gold M2 entry counts differ");
      std::vector<M2Entry> merged;
      std::vector<Sentence> candidates;
      for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].source != gold[i].source) {
          throw MismatchError("entry " + std::to_string(i + 1) + ": system and gold sources differ");
        }
        const EditSet sys_edits = system[i].annotations.empty() ? EditSet(system[i].source.size())
                                                                : system[i].annotations.begin()->second;
        EditSet m = merge_edit_sets(sys_edits, annotation_at(gold[i], cfg.gold_index, i + 1));
        candidates.push_back(apply_edits(system[i].source, m));
        merged.push_back({system[i].source, {{0, std::move(m)}}});
      }
      emit(output, write_m2(merged));
      if (!merge_candidates.empty()) write_file(merge_candidates, write_sentences(candidates));
    } else if (kfold->parsed()) {
      if (!kfold_corpus.empty()) cfg.train_corpus = kfold_corpus;
      if (cfg.train_corpus.empty()) throw ConfigError("kfold-build needs --corpus or corpus.train");
      if (!train_cmd.empty()) cfg.corrector_train = train_cmd;
      if (!infer_cmd.empty()) cfg.corrector_infer = infer_cmd;
      if (jobs != 0) cfg.jobs = jobs;
      const fs::path work = kfold_work.empty() ? cfg.output_dir / "kfold_work" : fs::path(kfold_work);
      const auto corpus = parse_parallel_tsv(read_file(cfg.train_corpus));
      const auto triples = cross_infer(corpus, {cfg.k, cfg.seed, cfg.gold_index, cfg.jobs},
                                       {cfg.corrector_train, cfg.corrector_infer, work});
      emit(output, write_triples_jsonl(triples));
    } else if (serialize->parsed()) {
      emit(output, serialize_triples(parse_triples_jsonl(read_file(serialize_input)), !no_candidate));
    } else if (train_lm->parsed()) {
      emit(output, CharNgramLM::train(parse_sentences(read_file(lm_input)), order, smooth_k).save());
    } else if (filter->parsed()) {
      if (!filter_model.empty()) {
        cfg.scorer_type = "ngram";
        cfg.scorer_model = filter_model;
      } else if (!filter_cmd.empty()) {
        cfg.scorer_type = "process";
        cfg.scorer_command = filter_cmd;
      }
      const auto scorer = make_scorer(cfg);
      const FilterRun r = filter_lines(parse_sentences(read_file(filter_source)),
                                       parse_sentences(read_file(filter_hyp)), *scorer,
                                       cfg.granularity, cfg.filter);
      report_beam(r.beam_fallbacks);
      emit(output, r.text);
    } else if (score->parsed()) {
      const ScoreReport report =
          score_m2(parse_m2(read_file(score_hyp)), parse_m2(read_file(score_ref)), beta);
      std::cout << report_table(report);
      const std::string json = report_json(report) + "\n";
      if (output.empty() || output == "-") {
        std::cout << json;
      } else {
        write_file(output, json);
      }
    } else if (pipeline->parsed()) {
      if (config_path.empty()) throw ConfigError("pipeline needs --config");
      if (!output.empty()) cfg.output_dir = output;
      for (const auto& [role, path] : run_pipeline(cfg)) {
        std::cout << role << "\t" << path.string() << "\n";
      }
    }
  } catch (const FoldFailureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.diagnostics().empty()) std::cerr << "--- corrector output ---\n" << e.diagnostics() << "\n";
    return kExitProcess;
  } catch (const ProcessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProcess;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace ocgec::cli
