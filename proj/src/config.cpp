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

#include "ocgec/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <map>
#include <set>

#include "ocgec/error.hpp"

namespace ocgec {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"corpus", {"train"}},
      {"kfold", {"k", "seed", "gold_index", "jobs"}},
      {"corrector", {"train", "infer"}},
      {"scorer", {"type", "train_text", "model", "order", "smooth_k", "command"}},
      {"filter", {"granularity", "max_exhaustive", "beam_width"}},
      {"eval", {"source", "hypothesis", "references"}},
      {"output", {"dir"}},
  };
  return keys;
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& path) {
  const std::string name = path.string();
  pt::ptree tree;
  try {
    pt::read_ini(name, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(name + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  for (const auto& [section, body] : tree) {
    const auto it = known_keys().find(section);
    if (it == known_keys().end()) {
      throw ConfigError(name + ": unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key)) {
        throw ConfigError(name + ": unknown key '" + key + "' in [" + section + "]");
      }
    }
  }

  const std::filesystem::path base = path.parent_path();
  auto as_path = [&](const char* key, std::filesystem::path& out) {
    if (auto v = tree.get_optional<std::string>(key)) {
      out = std::filesystem::path(*v).is_absolute() ? std::filesystem::path(*v) : base / *v;
    }
  };
  auto as_value = [&](const char* key, auto& out) {
    using T = std::decay_t<decltype(out)>;
    try {
      if (auto v = tree.get_optional<T>(key)) out = *v;
    } catch (const pt::ptree_bad_data&) {
      throw ConfigError(name + ": bad value for " + key + ": '" +
                        tree.get<std::string>(key) + "'");
    }
  };

  PipelineConfig cfg;
  as_path("corpus.train", cfg.train_corpus);
  as_value("kfold.k", cfg.k);
  as_value("kfold.seed", cfg.seed);
  as_value("kfold.gold_index", cfg.gold_index);
  as_value("kfold.jobs", cfg.jobs);
  as_value("corrector.train", cfg.corrector_train);
  as_value("corrector.infer", cfg.corrector_infer);
  as_value("scorer.type", cfg.scorer_type);
  as_path("scorer.train_text", cfg.scorer_train_text);
  as_path("scorer.model", cfg.scorer_model);
  as_value("scorer.order", cfg.order);
  as_value("scorer.smooth_k", cfg.smooth_k);
  as_value("scorer.command", cfg.scorer_command);
  if (auto g = tree.get_optional<std::string>("filter.granularity")) {
    try {
      cfg.granularity = parse_granularity(*g);
    } catch (const ConfigError& e) {
      throw ConfigError(name + ": " + e.what());
    }
  }
  as_value("filter.max_exhaustive", cfg.filter.max_exhaustive);
  as_value("filter.beam_width", cfg.filter.beam_width);
  as_path("eval.source", cfg.eval_source);
  as_path("eval.hypothesis", cfg.eval_hypothesis);
  as_path("eval.references", cfg.eval_references);
  cfg.output_dir = base / "out";
  as_path("output.dir", cfg.output_dir);

  if (cfg.scorer_type != "ngram" && cfg.scorer_type != "process") {
    throw ConfigError(name + ": scorer.type must be 'ngram' or 'process'");
  }
  return cfg;
}

}  // namespace ocgec
