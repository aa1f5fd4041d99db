#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entailkit/compose.hpp"
#include "entailkit/corpus.hpp"
#include "entailkit/eval.hpp"
#include "entailkit/measures.hpp"
#include "entailkit/tensors.hpp"
#include "entailkit/vector_space.hpp"

namespace ek = entailkit;
using nlohmann::json;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ek::IoError(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Trains one least-squares matrix per verb and slot from holistic phrase
// vectors collected over the corpus; verbs with too few phrases abstain.
void train_least_squares_models(const std::vector<std::string>& corpus_lines,
                                const ek::VectorSpace& space, const ek::VerbArgumentTable& table,
                                const ek::PipelineConfig& pconfig, double ridge,
                                std::size_t min_phrases, ek::Scorer* scorer,
                                json* serialized = nullptr) {
  auto base = ek::count_cooccurrences(corpus_lines, pconfig);
  for (auto slot : {ek::LeastSquaresVerbMatrix::Slot::Subject,
                    ek::LeastSquaresVerbMatrix::Slot::Object}) {
    bool subject_slot = slot == ek::LeastSquaresVerbMatrix::Slot::Subject;
    std::vector<std::pair<std::string, std::string>> phrases;
    std::map<std::string, std::set<std::string>> verb_args;
    for (const auto& [verb, occs] : table.occurrences) {
      for (const auto& occ : occs) {
        const auto& arg = subject_slot ? occ.subject : occ.object;
        if (arg && verb_args[verb].insert(*arg).second) phrases.emplace_back(verb, *arg);
      }
    }
    auto holistic = ek::collect_holistic_vectors(corpus_lines, phrases, space.vocab, base, pconfig);
    for (const auto& [verb, args] : verb_args) {
      std::vector<ek::DistVector> X, Y;
      for (const auto& arg : args) {
        auto hit = holistic.find(verb + " " + arg);
        const ek::DistVector* av = space.find(arg);
        if (hit == holistic.end() || !av) continue;
        X.push_back(*av);
        Y.push_back(hit->second);
      }
      if (X.size() < min_phrases) continue;
      try {
        auto m = ek::train_least_squares(X, Y, ridge, verb, slot);
        if (serialized) {
          (*serialized)[subject_slot ? "subject" : "object"][verb] = m.rows;
        }
        if (scorer) scorer->add_least_squares(std::move(m));
      } catch (const ek::SingularSystemError&) {
        // abstain for this verb
      }
    }
  }
}

int cmd_build_space(const std::string& corpus, std::size_t dims, std::size_t window,
                    std::size_t min_count, std::size_t threads, const std::string& out) {
  ek::PipelineConfig config;
  config.dims = dims;
  config.window = window;
  config.min_word_count = min_count;
  config.threads = threads;
  auto space = ek::build_space_from_file(corpus, config);
  ek::save_space(space, out);
  std::cout << "wrote " << space.vocab.num_words() << " words x " << space.vocab.num_dims()
            << " dims to " << out << "\n";
  return 0;
}

int cmd_build_verbs(const std::string& space_path, const std::string& triples_path,
                    const std::string& model, bool augment, const std::string& corpus,
                    double ridge, std::size_t window, const std::string& out) {
  auto space = ek::load_space(space_path);
  auto table = ek::resolve_table(ek::load_triples(triples_path), space.vocab);

  json doc;
  doc["model"] = model;
  doc["augment"] = augment;
  doc["dims"] = space.vocab.num_dims();
  json verbs = json::object();
  for (const auto& [verb, occs] : table.occurrences) {
    json occ_list = json::array();
    for (const auto& occ : occs) {
      occ_list.push_back({occ.subject ? json(*occ.subject) : json(nullptr),
                          occ.object ? json(*occ.object) : json(nullptr)});
    }
    verbs[verb] = {{"occurrences", occ_list}};
  }
  doc["verbs"] = verbs;
  doc["dropped_lines"] = table.dropped_lines;

  if (model == "least-squares") {
    if (corpus.empty()) {
      std::cerr << "least-squares needs --corpus to collect holistic phrase vectors\n";
      return 1;
    }
    ek::PipelineConfig pconfig;
    pconfig.window = window;
    json ls = json::object();
    train_least_squares_models(read_lines(corpus), space, table, pconfig, ridge, 3, nullptr, &ls);
    doc["least_squares"] = ls;
  }

  std::ofstream f(out);
  if (!f) throw ek::IoError(out);
  f << doc.dump(2) << "\n";
  std::cout << "wrote " << table.occurrences.size() << " verbs to " << out << "\n";
  return 0;
}

// Reconstructs a scorer from a space file plus an optional verbs file.
struct LoadedResources {
  ek::VectorSpace space;
  ek::VerbArgumentTable table;
  bool have_table = false;
  bool augment = true;
  json ls;  // serialized least-squares matrices, may be null
};

LoadedResources load_resources(const std::string& space_path, const std::string& verbs_path) {
  LoadedResources r;
  r.space = ek::load_space(space_path);
  if (!verbs_path.empty()) {
    std::ifstream f(verbs_path);
    if (!f) throw ek::IoError(verbs_path);
    json doc = json::parse(f);
    r.augment = doc.value("augment", true);
    for (auto& [verb, entry] : doc.at("verbs").items()) {
      for (auto& occ : entry.at("occurrences")) {
        ek::VerbOccurrence vo;
        if (!occ[0].is_null()) vo.subject = occ[0].get<std::string>();
        if (!occ[1].is_null()) vo.object = occ[1].get<std::string>();
        r.table.occurrences[verb].push_back(std::move(vo));
      }
    }
    if (doc.contains("least_squares")) r.ls = doc["least_squares"];
    r.have_table = true;
  }
  return r;
}

void install_least_squares(const LoadedResources& r, ek::Scorer* scorer) {
  if (r.ls.is_null()) return;
  for (const auto& slot_name : {"subject", "object"}) {
    if (!r.ls.contains(slot_name)) continue;
    for (auto& [verb, rows] : r.ls.at(slot_name).items()) {
      ek::LeastSquaresVerbMatrix m;
      m.verb = verb;
      m.slot = std::string(slot_name) == "subject" ? ek::LeastSquaresVerbMatrix::Slot::Subject
                                                   : ek::LeastSquaresVerbMatrix::Slot::Object;
      m.rows = rows.get<std::vector<double>>();
      m.dims = r.space.vocab.num_dims();
      scorer->add_least_squares(std::move(m));
    }
  }
}

int cmd_compose(const std::string& space_path, const std::string& verbs_path,
                const std::string& model, const std::string& phrase,
                const std::string& pattern_str) {
  auto r = load_resources(space_path, verbs_path);
  ek::ExperimentConfig config;
  config.augment = r.augment;
  ek::Scorer scorer(r.space, r.have_table ? &r.table : nullptr, config);
  install_least_squares(r, &scorer);

  std::istringstream ss(phrase);
  std::vector<std::string> words;
  std::string w;
  while (ss >> w) words.push_back(w);
  ek::Pattern pattern =
      pattern_str.empty() ? (words.size() == 3 ? ek::Pattern::SVO : ek::Pattern::SV)
                          : ek::pattern_from_name(pattern_str);
  ek::EntailmentPair dummy;
  dummy.left = words;
  dummy.right = words;
  scorer.prepare({dummy}, pattern);

  ek::DistVector v = scorer.compose_phrase(words, pattern, model);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) std::cout << '\t';
    std::cout << v[i];
  }
  std::cout << "\n";
  return 0;
}

int cmd_measure(const std::string& space_path, const std::string& verbs_path,
                const std::string& model, const std::string& left, const std::string& right,
                const std::string& measure, const std::string& pattern_str, double alpha,
                double epsilon) {
  auto r = load_resources(space_path, verbs_path);
  ek::ExperimentConfig config;
  config.augment = r.augment;
  config.measure.alpha = alpha;
  config.measure.epsilon = epsilon;
  ek::Scorer scorer(r.space, r.have_table ? &r.table : nullptr, config);
  install_least_squares(r, &scorer);

  auto split = [](const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> words;
    std::string w;
    while (ss >> w) words.push_back(w);
    return words;
  };
  ek::EntailmentPair pair;
  pair.left = split(left);
  pair.right = split(right);
  ek::Pattern pattern =
      pattern_str.empty() ? (pair.left.size() == 3 ? ek::Pattern::SVO : ek::Pattern::SV)
                          : ek::pattern_from_name(pattern_str);
  scorer.prepare({pair}, pattern);
  std::cout << scorer.score_pair(pair, pattern, model, measure) << "\n";
  return 0;
}

int cmd_evaluate(const std::string& dataset_path, const std::string& pattern_str,
                 const std::string& models_csv, const std::string& measures_csv,
                 const std::string& space_path, const std::string& triples_path,
                 const std::string& corpus_path, bool augment, double ridge, std::size_t window,
                 std::size_t threads, double alpha, double epsilon, const std::string& report_path,
                 const std::string& scores_path) {
  auto pattern = ek::pattern_from_name(pattern_str);
  auto models = split_csv(models_csv);
  auto measures = split_csv(measures_csv);
  for (const auto& m : models) {
    if (!ek::is_model_name(m)) {
      std::cerr << "unknown model: " << m << "\n";
      return 1;
    }
  }
  for (const auto& m : measures) {
    if (!ek::is_measure_name(m)) {
      std::cerr << "unknown measure: " << m << "\n";
      return 1;
    }
  }

  auto space = ek::load_space(space_path);
  ek::VerbArgumentTable table;
  bool have_table = false;
  if (!triples_path.empty()) {
    table = ek::resolve_table(ek::load_triples(triples_path), space.vocab);
    have_table = true;
  }

  ek::ExperimentConfig config;
  config.augment = augment;
  config.ridge = ridge;
  config.threads = threads;
  config.measure.alpha = alpha;
  config.measure.epsilon = epsilon;
  ek::Scorer scorer(space, have_table ? &table : nullptr, config);

  bool wants_ls = std::find(models.begin(), models.end(), "least-squares") != models.end();
  if (wants_ls) {
    if (corpus_path.empty() || !have_table) {
      std::cerr << "least-squares needs --corpus and --triples\n";
      return 1;
    }
    ek::PipelineConfig pconfig;
    pconfig.window = window;
    train_least_squares_models(read_lines(corpus_path), space, table, pconfig, ridge,
                               config.min_ls_phrases, &scorer);
  }

  auto dataset = ek::load_dataset(dataset_path, pattern);
  auto reports = ek::run_experiment(dataset, dataset_path, pattern, models, measures, scorer);

  std::string json_text = ek::report_to_json(reports);
  if (report_path.empty()) {
    std::cout << json_text << "\n";
  } else {
    std::ofstream f(report_path);
    if (!f) throw ek::IoError(report_path);
    f << json_text << "\n";
  }
  if (!scores_path.empty()) {
    std::ofstream f(scores_path);
    if (!f) throw ek::IoError(scores_path);
    for (const auto& r : reports) {
      for (std::size_t i = 0; i < r.scores.size(); ++i) {
        f << r.model << '\t' << r.measure << '\t' << r.labels[i] << '\t' << r.scores[i] << "\n";
      }
    }
  }
  for (const auto& r : reports) {
    std::cerr << r.model << " x " << r.measure << ": auc=" << r.auc_value
              << " scored=" << r.n_scored << " skipped=" << r.n_skipped << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributional vector spaces, verb tensors, and entailment evaluation"};
  app.require_subcommand(1);

  // build-space
  std::string bs_corpus, bs_out;
  std::size_t bs_dims = 300, bs_window = 5, bs_min_count = 1, bs_threads = 1;
  auto* build_space = app.add_subcommand("build-space", "count a corpus into a PPMI space");
  build_space->add_option("--corpus", bs_corpus)->required();
  build_space->add_option("--dims", bs_dims);
  build_space->add_option("--window", bs_window);
  build_space->add_option("--min-count", bs_min_count);
  build_space->add_option("--threads", bs_threads);
  build_space->add_option("--out", bs_out)->required();

  // build-verbs
  std::string bv_space, bv_triples, bv_model = "relational", bv_corpus, bv_out;
  bool bv_augment = true;
  double bv_ridge = 1e-6;
  std::size_t bv_window = 5;
  auto* build_verbs = app.add_subcommand("build-verbs", "store verb argument tables / matrices");
  build_verbs->add_option("--space", bv_space)->required();
  build_verbs->add_option("--triples", bv_triples)->required();
  build_verbs->add_option("--model", bv_model);
  build_verbs->add_flag("--augment-verb,!--no-augment-verb", bv_augment);
  build_verbs->add_option("--corpus", bv_corpus, "needed for least-squares training");
  build_verbs->add_option("--ridge", bv_ridge);
  build_verbs->add_option("--window", bv_window);
  build_verbs->add_option("--out", bv_out)->required();

  // compose
  std::string cp_space, cp_verbs, cp_model = "mul", cp_phrase, cp_pattern;
  auto* compose = app.add_subcommand("compose", "print the composite vector of a phrase");
  compose->add_option("--space", cp_space)->required();
  compose->add_option("--verbs", cp_verbs);
  compose->add_option("--model", cp_model);
  compose->add_option("--phrase", cp_phrase)->required();
  compose->add_option("--pattern", cp_pattern, "sv, vo, or svo");

  // measure
  std::string ms_space, ms_verbs, ms_model = "mul", ms_left, ms_right, ms_measure, ms_pattern;
  double ms_alpha = 0.99, ms_epsilon = 1e-8;
  auto* measure = app.add_subcommand("measure", "score one phrase pair");
  measure->add_option("--space", ms_space)->required();
  measure->add_option("--verbs", ms_verbs);
  measure->add_option("--model", ms_model);
  measure->add_option("--left", ms_left)->required();
  measure->add_option("--right", ms_right)->required();
  measure->add_option("--measure", ms_measure)->required();
  measure->add_option("--pattern", ms_pattern);
  measure->add_option("--alpha", ms_alpha);
  measure->add_option("--epsilon", ms_epsilon);

  // evaluate
  std::string ev_dataset, ev_pattern, ev_models, ev_measures, ev_space, ev_triples, ev_corpus,
      ev_report, ev_scores;
  bool ev_augment = true;
  double ev_ridge = 1e-6, ev_alpha = 0.99, ev_epsilon = 1e-8;
  std::size_t ev_window = 5, ev_threads = 1;
  auto* evaluate = app.add_subcommand("evaluate", "run model x measure combinations over a dataset");
  evaluate->add_option("--dataset", ev_dataset)->required();
  evaluate->add_option("--pattern", ev_pattern)->required();
  evaluate->add_option("--models", ev_models, "comma-separated model names")->required();
  evaluate->add_option("--measures", ev_measures, "comma-separated measure names")->required();
  evaluate->add_option("--space", ev_space)->required();
  evaluate->add_option("--triples", ev_triples);
  evaluate->add_option("--corpus", ev_corpus, "needed for least-squares training");
  evaluate->add_flag("--augment-verb,!--no-augment-verb", ev_augment);
  evaluate->add_option("--ridge", ev_ridge);
  evaluate->add_option("--window", ev_window);
  evaluate->add_option("--threads", ev_threads);
  evaluate->add_option("--alpha", ev_alpha);
  evaluate->add_option("--epsilon", ev_epsilon);
  evaluate->add_option("--report", ev_report);
  evaluate->add_option("--scores", ev_scores, "optional TSV of per-pair scores");

  std::size_t seed = 0;
  app.add_option("--seed", seed, "reserved; the pipeline is deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (build_space->parsed()) {
      return cmd_build_space(bs_corpus, bs_dims, bs_window, bs_min_count, bs_threads, bs_out);
    }
    if (build_verbs->parsed()) {
      if (bv_model != "least-squares" && !ek::is_model_name(bv_model)) {
        std::cerr << "unknown model: " << bv_model << "\n";
        return 1;
      }
      return cmd_build_verbs(bv_space, bv_triples, bv_model, bv_augment, bv_corpus, bv_ridge,
                             bv_window, bv_out);
    }
    if (compose->parsed()) {
      if (!ek::is_model_name(cp_model)) {
        std::cerr << "unknown model: " << cp_model << "\n";
        return 1;
      }
      return cmd_compose(cp_space, cp_verbs, cp_model, cp_phrase, cp_pattern);
    }
    if (measure->parsed()) {
      if (!ek::is_measure_name(ms_measure)) {
        std::cerr << "unknown measure: " << ms_measure << "\n";
        return 1;
      }
      return cmd_measure(ms_space, ms_verbs, ms_model, ms_left, ms_right, ms_measure, ms_pattern,
                         ms_alpha, ms_epsilon);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(ev_dataset, ev_pattern, ev_models, ev_measures, ev_space, ev_triples,
                          ev_corpus, ev_augment, ev_ridge, ev_window, ev_threads, ev_alpha,
                          ev_epsilon, ev_report, ev_scores);
    }
  } catch (const ek::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
