#include "termex/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "termex/corpus.hpp"
#include "termex/errors.hpp"
#include "termex/evaluation.hpp"
#include "termex/expansion.hpp"
#include "termex/model.hpp"
#include "termex/morphology.hpp"
#include "termex/synthfix.hpp"
#include "termex/trainer.hpp"
#include "termex/vecindex.hpp"

namespace termex::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// path helpers

std::vector<std::string> collect_txt_files(const std::string& root) {
  const fs::path path(root);
  if (fs::is_regular_file(path)) return {path.generic_string()};
  if (!fs::is_directory(path)) throw IoError("no such file or directory: " + root);
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(path))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path().generic_string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DataError("no .txt files under " + root);
  return files;
}

bool wildcard_match(std::string_view pattern, std::string_view text) {
  // Iterative * / ? matcher.
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

// Expands a path that may contain * or ? in its filename component.
std::vector<std::string> expand_glob(const std::string& pattern) {
  const fs::path as_path(pattern);
  const std::string name = as_path.filename().generic_string();
  if (name.find('*') == std::string::npos && name.find('?') == std::string::npos) {
    if (fs::is_directory(as_path)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(as_path))
        if (entry.is_regular_file()) files.push_back(entry.path().generic_string());
      std::sort(files.begin(), files.end());
      return files;
    }
    return {pattern};
  }
  const fs::path dir = as_path.parent_path().empty() ? "." : as_path.parent_path();
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() &&
        wildcard_match(name, entry.path().filename().generic_string()))
      files.push_back(entry.path().generic_string());
  std::sort(files.begin(), files.end());
  return files;
}

std::string resolve_from(const fs::path& base, const std::string& maybe_relative) {
  const fs::path p(maybe_relative);
  return p.is_absolute() ? p.generic_string() : (base / p).generic_string();
}

void write_text_file(const std::string& path, const std::string& text) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// config merging: defaults <- config file <- explicit flags

void apply_train_json(TrainConfig& cfg, const ordered_json& doc) {
  cfg.dim = doc.value("dim", cfg.dim);
  cfg.window = doc.value("window", cfg.window);
  cfg.epochs = doc.value("epochs", cfg.epochs);
  cfg.negatives = doc.value("negatives", cfg.negatives);
  cfg.min_count = doc.value("min_count", cfg.min_count);
  cfg.ngram_min = doc.value("ngram_min", cfg.ngram_min);
  cfg.ngram_max = doc.value("ngram_max", cfg.ngram_max);
  cfg.buckets = doc.value("buckets", cfg.buckets);
  cfg.learning_rate = doc.value("learning_rate", cfg.learning_rate);
  cfg.subsample_t = doc.value("subsample_t", cfg.subsample_t);
  cfg.rng_seed = doc.value("rng_seed", cfg.rng_seed);
  cfg.threads = doc.value("threads", cfg.threads);
}

void apply_thread_cap(TrainConfig& cfg) {
  const char* env = std::getenv("TERMEX_THREADS");
  if (env == nullptr || *env == '\0') return;
  const long cap = std::strtol(env, nullptr, 10);
  if (cap <= 0)
    cfg.threads = 1;  // 0 = deterministic single worker
  else
    cfg.threads = std::min(cfg.threads > 0 ? cfg.threads : 1, static_cast<int>(cap));
}

struct TrainFlags {
  CLI::Option* dim = nullptr;
  CLI::Option* window = nullptr;
  CLI::Option* epochs = nullptr;
  CLI::Option* negatives = nullptr;
  CLI::Option* min_count = nullptr;
  CLI::Option* ngram_min = nullptr;
  CLI::Option* ngram_max = nullptr;
  CLI::Option* buckets = nullptr;
  CLI::Option* learning_rate = nullptr;
  CLI::Option* subsample = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* threads = nullptr;
};

TrainFlags add_train_options(CLI::App* cmd, TrainConfig& cfg) {
  TrainFlags flags;
  flags.dim = cmd->add_option("--dim", cfg.dim, "Vector dimension")->capture_default_str();
  flags.window = cmd->add_option("--window", cfg.window, "Context radius")->capture_default_str();
  flags.epochs = cmd->add_option("--epochs", cfg.epochs, "Training passes")->capture_default_str();
  flags.negatives =
      cmd->add_option("--negatives", cfg.negatives, "Negative samples per pair")
          ->capture_default_str();
  flags.min_count =
      cmd->add_option("--min-count", cfg.min_count, "Vocabulary frequency threshold")
          ->capture_default_str();
  flags.ngram_min =
      cmd->add_option("--ngram-min", cfg.ngram_min, "Shortest subword n-gram")
          ->capture_default_str();
  flags.ngram_max =
      cmd->add_option("--ngram-max", cfg.ngram_max, "Longest subword n-gram")
          ->capture_default_str();
  flags.buckets = cmd->add_option("--buckets", cfg.buckets, "Subword hash buckets")
                      ->capture_default_str();
  flags.learning_rate =
      cmd->add_option("--lr", cfg.learning_rate, "Initial learning rate")
          ->capture_default_str();
  flags.subsample =
      cmd->add_option("--subsample", cfg.subsample_t,
                      "Frequent-word subsampling threshold (0 disables)")
          ->capture_default_str();
  flags.seed = cmd->add_option("--seed", cfg.rng_seed, "RNG seed")->capture_default_str();
  flags.threads =
      cmd->add_option("--threads", cfg.threads, "Workers; <=1 is deterministic")
          ->capture_default_str();
  return flags;
}

// Re-applies explicitly passed flags on top of config-file values.
void merge_train_config(TrainConfig& cfg, const TrainConfig& from_flags,
                        const TrainFlags& flags) {
  if (flags.dim->count()) cfg.dim = from_flags.dim;
  if (flags.window->count()) cfg.window = from_flags.window;
  if (flags.epochs->count()) cfg.epochs = from_flags.epochs;
  if (flags.negatives->count()) cfg.negatives = from_flags.negatives;
  if (flags.min_count->count()) cfg.min_count = from_flags.min_count;
  if (flags.ngram_min->count()) cfg.ngram_min = from_flags.ngram_min;
  if (flags.ngram_max->count()) cfg.ngram_max = from_flags.ngram_max;
  if (flags.buckets->count()) cfg.buckets = from_flags.buckets;
  if (flags.learning_rate->count()) cfg.learning_rate = from_flags.learning_rate;
  if (flags.subsample->count()) cfg.subsample_t = from_flags.subsample_t;
  if (flags.seed->count()) cfg.rng_seed = from_flags.rng_seed;
  if (flags.threads->count()) cfg.threads = from_flags.threads;
}

// ---------------------------------------------------------------------------
// shared stages

Corpus load_corpus(const std::string& root, Language language) {
  return tokenize(ingest(collect_txt_files(root), language));
}

struct GoldIndex {
  // (language, relation) -> path, keyed by "<lang>_<relation>" file stems.
  std::map<std::pair<Language, Relation>, std::string> paths;

  static GoldIndex from_paths(const std::vector<std::string>& files) {
    GoldIndex index;
    for (const auto& file : files) {
      const std::string stem = fs::path(file).stem().generic_string();
      const auto underscore = stem.find('_');
      if (underscore == std::string::npos) continue;
      try {
        const Language lang = parse_language(stem.substr(0, underscore));
        const Relation rel = parse_relation(stem.substr(underscore + 1));
        index.paths[{lang, rel}] = file;
      } catch (const DataError&) {
        continue;  // not a gold file name; ignore
      }
    }
    return index;
  }
};

RelationScore score_against_gold(const CandidateSet& set, const GoldIndex& gold) {
  const auto it = gold.paths.find({set.spec.language, set.spec.relation});
  if (it == gold.paths.end()) {
    std::cerr << "termex: no gold file for " << to_string(set.spec.language) << "_"
              << to_string(set.spec.relation) << "; scoring all candidates as unjudged\n";
    GoldAnnotation empty;
    empty.relation = set.spec.relation;
    empty.language = set.spec.language;
    return score(set, empty);
  }
  return score(set, load_gold(it->second, set.spec.relation, set.spec.language));
}

ClusterReport build_cluster_report(const CandidateSet& set,
                                   const std::vector<std::string>& seeds,
                                   const std::vector<std::string>& terms,
                                   const ClusterConfig& config) {
  ClusterReport report;
  report.relation = set.spec.relation;
  report.language = set.spec.language;
  const auto words = set.words();
  report.suffix = suffix_clusters(words, seeds, config);
  report.prefix = prefix_clusters(words, seeds, config);
  if (!terms.empty()) report.derivational = derivational_clusters(words, terms, config);

  std::vector<Cluster> all;
  all.insert(all.end(), report.suffix.begin(), report.suffix.end());
  all.insert(all.end(), report.prefix.begin(), report.prefix.end());
  all.insert(all.end(), report.derivational.begin(), report.derivational.end());
  report.residual = residual(words, all);
  return report;
}

// ---------------------------------------------------------------------------
// subcommands

void run_stats(const std::string& root, const std::string& lang, bool as_json) {
  const Corpus corpus = load_corpus(root, parse_language(lang));
  const CorpusStats stats = corpus_stats(corpus);
  if (as_json) {
    ordered_json doc;
    doc["tokens"] = stats.tokens;
    doc["words"] = stats.words;
    doc["sentences"] = stats.sentences;
    doc["documents"] = stats.documents;
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::cout << "tokens     " << stats.tokens << '\n'
            << "words      " << stats.words << '\n'
            << "sentences  " << stats.sentences << '\n'
            << "documents  " << stats.documents << '\n';
}

void run_train(const TrainConfig& cfg, const std::string& corpus_dir,
               const std::string& lang, const std::string& out) {
  TrainConfig config = cfg;
  apply_thread_cap(config);
  const Corpus corpus = load_corpus(corpus_dir, parse_language(lang));
  std::cerr << "termex: training on " << corpus.documents.size() << " documents\n";
  const EmbeddingModel model = train(corpus, config);
  save_vectors(model, out);
  std::cerr << "termex: wrote " << model.vocab().size() << " vectors to " << out << '\n';
}

void run_neighbors(const std::string& vectors, const std::string& word, std::size_t k) {
  const EmbeddingModel model = load_vectors(vectors);
  const VectorIndex index = VectorIndex::build(model);
  const NeighborSet neighbors = index.nearest(word, k);
  char buf[32];
  for (const auto& [neighbor, cosine] : neighbors.neighbors) {
    std::snprintf(buf, sizeof(buf), "%.6f", cosine);
    std::cout << neighbor << '\t' << buf << '\n';
  }
}

void run_expand(const std::string& vectors, const std::string& seeds_path,
                const std::string& relation, const std::string& lang, std::size_t k,
                std::size_t subset_min, std::size_t subset_max, const std::string& out) {
  const auto specs = load_relation_specs(seeds_path);
  const RelationSpec& spec =
      find_spec(specs, parse_relation(relation), parse_language(lang));
  const EmbeddingModel model = load_vectors(vectors);
  const VectorIndex index = VectorIndex::build(model);
  const CandidateSet result = expand(spec, index, k, subset_min, subset_max);
  for (const auto& missing : result.missing_seeds)
    std::cerr << "termex: seed not in vectors, skipped: " << missing << '\n';
  if (out.empty()) {
    for (const auto& c : result.candidates)
      std::cout << c.word << '\t' << c.supporting_seeds.size() << '\n';
  } else {
    save_candidate_set(result, out);
    std::cerr << "termex: wrote " << result.candidates.size() << " candidates to " << out
              << '\n';
  }
}

CandidateSet load_candidates_any(const std::string& path, const std::string& relation,
                                 const std::string& lang) {
  if (fs::path(path).extension() == ".txt") {
    if (relation.empty() || lang.empty())
      throw DataError("--relation and --lang are required for plain-text candidate lists");
    CandidateSet set;
    set.spec.relation = parse_relation(relation);
    set.spec.language = parse_language(lang);
    for (auto& word : read_word_list(path)) {
      Candidate c;
      c.word = std::move(word);
      set.candidates.push_back(std::move(c));
    }
    return set;
  }
  CandidateSet set = load_candidate_set(path);
  if (!relation.empty()) set.spec.relation = parse_relation(relation);
  if (!lang.empty()) set.spec.language = parse_language(lang);
  return set;
}

void run_cluster(const std::string& candidates_path, const std::string& seeds_path,
                 const std::string& terms_path, const std::string& relation,
                 const std::string& lang, const ClusterConfig& config,
                 const std::string& out) {
  const CandidateSet set = load_candidates_any(candidates_path, relation, lang);

  std::vector<std::string> seeds = set.spec.seeds;
  if (!seeds_path.empty()) {
    const auto specs = load_relation_specs(seeds_path);
    seeds = find_spec(specs, set.spec.relation, set.spec.language).seeds;
  }
  std::vector<std::string> terms;
  if (!terms_path.empty()) terms = read_word_list(terms_path);

  CandidateSet with_seeds = set;
  with_seeds.spec.seeds = seeds;
  const ClusterReport report = build_cluster_report(with_seeds, seeds, terms, config);
  if (out.empty()) {
    const std::vector<ClusterReport> reports{report};
    std::cout << emit_report({}, {}, reports, ReportFormat::MARKDOWN);
  } else {
    save_cluster_report(report, out);
    std::cerr << "termex: wrote clusters to " << out << '\n';
  }
}

void run_evaluate(const std::vector<std::string>& candidate_patterns,
                  const std::vector<std::string>& gold_patterns,
                  const std::vector<std::string>& cluster_patterns,
                  const std::string& out_md, const std::string& out_json) {
  std::vector<CandidateSet> sets;
  for (const auto& pattern : candidate_patterns)
    for (const auto& file : expand_glob(pattern)) sets.push_back(load_candidate_set(file));
  if (sets.empty()) throw DataError("no candidate sets matched");

  std::vector<std::string> gold_files;
  for (const auto& pattern : gold_patterns)
    for (const auto& file : expand_glob(pattern)) gold_files.push_back(file);
  const GoldIndex gold = GoldIndex::from_paths(gold_files);

  std::vector<RelationScore> scores;
  scores.reserve(sets.size());
  for (const auto& set : sets) scores.push_back(score_against_gold(set, gold));

  // Overlaps per language, when two or more sets share one.
  std::vector<OverlapReport> overlaps;
  for (const Language language : {Language::EN, Language::HR}) {
    std::vector<CandidateSet> same;
    for (const auto& set : sets)
      if (set.spec.language == language) same.push_back(set);
    if (same.size() >= 2) overlaps.push_back(cross_relation_overlap(same));
  }

  std::vector<ClusterReport> clusters;
  for (const auto& pattern : cluster_patterns)
    for (const auto& file : expand_glob(pattern))
      clusters.push_back(load_cluster_report(file));

  const std::string markdown = emit_report(scores, overlaps, clusters, ReportFormat::MARKDOWN);
  if (out_md.empty())
    std::cout << markdown;
  else
    write_text_file(out_md, markdown);
  if (!out_json.empty())
    write_text_file(out_json, emit_report(scores, overlaps, clusters, ReportFormat::JSON));
}

void run_synth(const std::string& spec_path, const std::string& out_dir,
               const std::string& manifest_path, const std::string& seeds_out,
               const std::string& gold_out) {
  const SynthSpec spec = load_synth_spec(spec_path);
  const SynthResult result = generate(spec);

  write_text_file((fs::path(out_dir) / "synthetic.txt").generic_string(), result.document);
  if (!manifest_path.empty()) save_manifest(result.manifest, manifest_path);

  if (!seeds_out.empty()) {
    ordered_json seeds = ordered_json::array();
    for (const auto& family : result.manifest.families) {
      ordered_json entry;
      entry["relation"] = to_string(family.relation);
      entry["language"] = to_string(result.manifest.language);
      entry["seeds"] = family.seeds;
      seeds.push_back(std::move(entry));
    }
    write_text_file(seeds_out, seeds.dump(2) + "\n");
  }

  if (!gold_out.empty()) {
    const std::string tsv = manifest_gold_tsv(result.manifest);
    for (const auto& family : result.manifest.families) {
      const std::string name = std::string(to_string(result.manifest.language)) + "_" +
                               std::string(to_string(family.relation)) + ".tsv";
      write_text_file((fs::path(gold_out) / name).generic_string(), tsv);
    }
  }
  std::cerr << "termex: generated " << spec.sentences << " sentences in " << out_dir << '\n';
}

void run_pipeline(const std::string& config_path) {
  const ordered_json doc = read_json_file(config_path);
  const fs::path base = fs::absolute(fs::path(config_path)).parent_path();

  const Language language = parse_language(doc.value("language", std::string("en")));
  const std::string corpus_dir = resolve_from(base, doc.at("corpus_dir").get<std::string>());
  const std::string out_dir = resolve_from(base, doc.value("out_dir", std::string("out")));
  const std::string seeds_path = resolve_from(base, doc.at("seeds").get<std::string>());

  TrainConfig train_cfg;
  if (doc.contains("train")) apply_train_json(train_cfg, doc["train"]);
  apply_thread_cap(train_cfg);

  std::size_t k = 100, subset_min = 2, subset_max = 10;
  if (doc.contains("expand")) {
    k = doc["expand"].value("k", k);
    subset_min = doc["expand"].value("subset_min", subset_min);
    subset_max = doc["expand"].value("subset_max", subset_max);
  }

  ClusterConfig cluster_cfg;
  if (doc.contains("cluster")) {
    cluster_cfg.min_affix_len = doc["cluster"].value("min_affix_len", cluster_cfg.min_affix_len);
    cluster_cfg.max_affix_len = doc["cluster"].value("max_affix_len", cluster_cfg.max_affix_len);
    cluster_cfg.min_cluster_size =
        doc["cluster"].value("min_cluster_size", cluster_cfg.min_cluster_size);
    cluster_cfg.min_stem_len = doc["cluster"].value("min_stem_len", cluster_cfg.min_stem_len);
  }

  std::vector<std::string> terms;
  if (doc.contains("terms") && !doc["terms"].is_null())
    terms = read_word_list(resolve_from(base, doc["terms"].get<std::string>()));

  fs::create_directories(out_dir);

  // train
  const Corpus corpus = load_corpus(corpus_dir, language);
  std::cerr << "termex: pipeline training\n";
  const EmbeddingModel model = train(corpus, train_cfg);
  const std::string vectors_path = (fs::path(out_dir) / "vectors.txt").generic_string();
  save_vectors(model, vectors_path);

  // expand + cluster per relation
  const VectorIndex index = VectorIndex::build(model);
  const auto specs = load_relation_specs(seeds_path);

  std::vector<CandidateSet> sets;
  std::vector<ClusterReport> clusters;
  for (const auto& spec : specs) {
    if (spec.language != language) continue;
    CandidateSet set = expand(spec, index, k, subset_min, subset_max);
    const std::string stem = std::string(to_string(language)) + "_" +
                             std::string(to_string(spec.relation));
    save_candidate_set(set, (fs::path(out_dir) / ("candidates_" + stem + ".json")).generic_string());
    ClusterReport report = build_cluster_report(set, spec.seeds, terms, cluster_cfg);
    save_cluster_report(report,
                        (fs::path(out_dir) / ("clusters_" + stem + ".json")).generic_string());
    sets.push_back(std::move(set));
    clusters.push_back(std::move(report));
  }
  if (sets.empty()) throw DataError("no seed lists for language " + std::string(to_string(language)));

  // evaluate
  GoldIndex gold;
  if (doc.contains("gold_dir") && !doc["gold_dir"].is_null()) {
    const std::string gold_dir = resolve_from(base, doc["gold_dir"].get<std::string>());
    gold = GoldIndex::from_paths(expand_glob(gold_dir));
  }
  std::vector<RelationScore> scores;
  for (const auto& set : sets) scores.push_back(score_against_gold(set, gold));

  std::vector<OverlapReport> overlaps;
  if (sets.size() >= 2) overlaps.push_back(cross_relation_overlap(sets));

  write_text_file((fs::path(out_dir) / "report.md").generic_string(),
                  emit_report(scores, overlaps, clusters, ReportFormat::MARKDOWN));
  write_text_file((fs::path(out_dir) / "report.json").generic_string(),
                  emit_report(scores, overlaps, clusters, ReportFormat::JSON));
  std::cerr << "termex: pipeline outputs in " << out_dir << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"termex: extracts semantically related terms from a domain corpus\n"
               "via subword skip-gram embeddings and neighbor-set intersections",
               "termex"};
  app.require_subcommand(1);

  // stats
  std::string stats_path, stats_lang = "en";
  bool stats_json = false;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus token/word/sentence counts");
  stats_cmd->add_option("path", stats_path, "Corpus directory or .txt file")->required();
  stats_cmd->add_option("--lang", stats_lang, "Language tag (en|hr)")->capture_default_str();
  stats_cmd->add_flag("--json", stats_json, "Emit JSON instead of the table");
  stats_cmd->callback([&] { run_stats(stats_path, stats_lang, stats_json); });

  // train
  TrainConfig train_flags_cfg;
  std::string train_dir, train_lang = "en", train_out = "vectors.txt", train_config_path;
  auto* train_cmd = app.add_subcommand("train", "Train subword skip-gram vectors");
  train_cmd->add_option("corpus", train_dir, "Corpus directory or .txt file")->required();
  train_cmd->add_option("--lang", train_lang, "Language tag")->capture_default_str();
  train_cmd->add_option("--out", train_out, "Vector file to write")->capture_default_str();
  train_cmd->add_option("--config", train_config_path, "JSON config (flags override)");
  const TrainFlags train_flags = add_train_options(train_cmd, train_flags_cfg);
  train_cmd->callback([&] {
    TrainConfig cfg;
    if (!train_config_path.empty()) {
      const ordered_json doc = read_json_file(train_config_path);
      apply_train_json(cfg, doc.contains("train") ? doc["train"] : doc);
    }
    merge_train_config(cfg, train_flags_cfg, train_flags);
    run_train(cfg, train_dir, train_lang, train_out);
  });

  // neighbors
  std::string nb_vectors, nb_word;
  std::size_t nb_k = 100;
  auto* nb_cmd = app.add_subcommand("neighbors", "Top-k cosine neighbors of a word");
  nb_cmd->add_option("--vectors", nb_vectors, "Vector file")->required();
  nb_cmd->add_option("--k", nb_k, "Neighbor count")->capture_default_str();
  nb_cmd->add_option("word", nb_word, "Query word")->required();
  nb_cmd->callback([&] { run_neighbors(nb_vectors, nb_word, nb_k); });

  // expand
  std::string ex_vectors, ex_seeds, ex_relation, ex_lang = "en", ex_out;
  std::size_t ex_k = 100, ex_min = 2, ex_max = 10;
  auto* ex_cmd = app.add_subcommand("expand", "Expand a seed set via neighbor intersections");
  ex_cmd->add_option("--vectors", ex_vectors, "Vector file")->required();
  ex_cmd->add_option("--seeds", ex_seeds, "Seed list JSON")->required();
  ex_cmd->add_option("--relation", ex_relation, "Relation to expand")->required();
  ex_cmd->add_option("--lang", ex_lang, "Language tag")->capture_default_str();
  ex_cmd->add_option("--k", ex_k, "Neighbors per seed")->capture_default_str();
  ex_cmd->add_option("--subset-min", ex_min, "Smallest seed subset")->capture_default_str();
  ex_cmd->add_option("--subset-max", ex_max, "Largest seed subset")->capture_default_str();
  ex_cmd->add_option("--out", ex_out, "Candidate JSON to write (default: stdout)");
  ex_cmd->callback(
      [&] { run_expand(ex_vectors, ex_seeds, ex_relation, ex_lang, ex_k, ex_min, ex_max, ex_out); });

  // cluster
  std::string cl_candidates, cl_seeds, cl_terms, cl_relation, cl_lang, cl_out;
  ClusterConfig cl_cfg;
  auto* cl_cmd = app.add_subcommand("cluster", "Group candidates by shared affixes");
  cl_cmd->add_option("--candidates", cl_candidates, "Candidate JSON or .txt word list")
      ->required();
  cl_cmd->add_option("--seeds", cl_seeds, "Seed list JSON (anchors)");
  cl_cmd->add_option("--terms", cl_terms, "Term lexicon for derivational clusters");
  cl_cmd->add_option("--relation", cl_relation, "Relation of a plain-text candidate list");
  cl_cmd->add_option("--lang", cl_lang, "Language of a plain-text candidate list");
  cl_cmd->add_option("--min-affix-len", cl_cfg.min_affix_len, "Shortest affix")
      ->capture_default_str();
  cl_cmd->add_option("--max-affix-len", cl_cfg.max_affix_len, "Longest affix")
      ->capture_default_str();
  cl_cmd->add_option("--min-cluster-size", cl_cfg.min_cluster_size, "Smallest cluster")
      ->capture_default_str();
  cl_cmd->add_option("--min-stem-len", cl_cfg.min_stem_len, "Derivational stem floor")
      ->capture_default_str();
  cl_cmd->add_option("--out", cl_out, "Cluster JSON to write (default: stdout markdown)");
  cl_cmd->callback([&] {
    run_cluster(cl_candidates, cl_seeds, cl_terms, cl_relation, cl_lang, cl_cfg, cl_out);
  });

  // evaluate
  std::vector<std::string> ev_candidates, ev_gold, ev_clusters;
  std::string ev_out, ev_json;
  auto* ev_cmd = app.add_subcommand("evaluate", "Score candidates against gold judgments");
  ev_cmd->add_option("--candidates", ev_candidates, "Candidate JSON files (globs ok)")
      ->required()
      ->expected(-1);
  ev_cmd->add_option("--gold", ev_gold, "Gold TSV files or directory (globs ok)")->expected(-1);
  ev_cmd->add_option("--clusters", ev_clusters, "Cluster JSON files to include (globs ok)")
      ->expected(-1);
  ev_cmd->add_option("--out", ev_out, "Markdown report path (default: stdout)");
  ev_cmd->add_option("--json", ev_json, "JSON report path");
  ev_cmd->callback([&] { run_evaluate(ev_candidates, ev_gold, ev_clusters, ev_out, ev_json); });

  // synth
  std::string sy_spec, sy_out = "synth-corpus", sy_manifest = "manifest.json", sy_seeds, sy_gold;
  auto* sy_cmd = app.add_subcommand("synth", "Generate a planted-truth synthetic corpus");
  sy_cmd->add_option("--spec", sy_spec, "Synthetic spec JSON")->required();
  sy_cmd->add_option("--out", sy_out, "Corpus directory to write")->capture_default_str();
  sy_cmd->add_option("--manifest", sy_manifest, "Planted-truth manifest path")
      ->capture_default_str();
  sy_cmd->add_option("--seeds-out", sy_seeds, "Also write a seed list JSON");
  sy_cmd->add_option("--gold-out", sy_gold, "Also write per-relation gold TSVs");
  sy_cmd->callback([&] { run_synth(sy_spec, sy_out, sy_manifest, sy_seeds, sy_gold); });

  // pipeline
  std::string pl_config;
  auto* pl_cmd =
      app.add_subcommand("pipeline", "Run train -> expand -> cluster -> evaluate from a config");
  pl_cmd->add_option("--config", pl_config, "Pipeline config JSON")->required();
  pl_cmd->callback([&] { run_pipeline(pl_config); });

  try {
    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());  // CLI11 consumes back-to-front
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "termex: " << e.what() << '\n' << app.help();
    return 1;
  } catch (const termex::Error& e) {
    std::cerr << "termex: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "termex: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "termex: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace termex::cli
