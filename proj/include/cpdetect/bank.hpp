#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpdetect/embedding.hpp"

namespace cpd {

// Cached text embeddings for one class: the m benign attribute sentences,
// their raw arithmetic mean, the single malignant prompt, and the plain
// class template.
struct ClassPromptEmbeddings {
  int class_id = 0;
  std::vector<EmbeddingVector> benign;
  EmbeddingVector benign_mean;
  EmbeddingVector malignant;
  EmbeddingVector template_prompt;

  // Computes benign_mean and checks dimensional consistency.
  static ClassPromptEmbeddings make(int class_id,
                                    std::vector<EmbeddingVector> benign,
                                    EmbeddingVector malignant,
                                    EmbeddingVector template_prompt);
};

// Immutable per-class prompt embedding index covering the whole label space.
// Class ids are contiguous from 0; every class carries the same m and dim.
struct PromptBankIndex {
  std::vector<ClassPromptEmbeddings> classes;
  std::size_t dim = 0;
  std::size_t m = 0;
  std::string provenance;

  std::size_t num_classes() const { return classes.size(); }

  // Checks structural invariants: contiguous ids, uniform m and dim, and
  // benign_mean consistent with its sentences to 1e-12 per component.
  // `min_classes` is 1 here; detection entry points require 2.
  void validate(std::size_t min_classes = 1) const;
};

PromptBankIndex make_bank_index(std::vector<ClassPromptEmbeddings> classes,
                                std::string provenance);

}  // namespace cpd
