// Copyright 2026 The textaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Regenerates the shipped synthetic corpus and its mock translation legs.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "textaug/errors.h"
#include "textaug/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app("Write a planted-keyword comment corpus and mock BT legs",
               "textaug-make-synthetic");
  textaug::SyntheticSpec spec;
  std::string out_dir;
  app.add_option("--out-dir", out_dir, "Directory for comments.csv and bt_script.tsv")
      ->required();
  app.add_option("--documents", spec.documents, "Corpus size")->capture_default_str();
  app.add_option("--positive-fraction", spec.positive_fraction, "Toxic share")
      ->capture_default_str();
  app.add_option("--base-form-probability", spec.base_form_probability,
                 "Chance a keyword outside small-train keeps its base form")
      ->capture_default_str();
  app.add_option("--second-insult-probability", spec.second_insult_probability,
                 "Chance a toxic comment holds two insults")
      ->capture_default_str();
  app.add_option("--max-toxic-filler", spec.max_toxic_filler,
                 "Most neutral sentences in a toxic comment")
      ->capture_default_str();
  app.add_option("--seed", spec.seed, "Text generation seed")->capture_default_str();
  app.add_option("--master-seed", spec.master_seed,
                 "Experiment master seed whose small-train set keeps base forms")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    const textaug::SyntheticData data = textaug::GenerateSynthetic(spec);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    textaug::WriteSyntheticCsv(data.documents, dir / "comments.csv");
    textaug::WriteScript(data.legs, dir / "bt_script.tsv");
    std::cout << "documents\t" << data.documents.size() << "\nlegs\t"
              << data.legs.size() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
