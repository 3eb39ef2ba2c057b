#pragma once

/*
 * corpus.hpp
 * ----------
 * Six built-in quadratic algebras on four generators with six relations,
 * together with frozen golden reports.  `run_corpus` recomputes each
 * pipeline hermetically (no file system access) and diffs against the
 * goldens.
 */

#include <ostream>
#include <string>
#include <vector>

#include "ps/presentation.hpp"

namespace ps {

struct CorpusEntry {
  std::string name;
  std::string presentation_text;
  std::string golden_json;  // scheme report, schema 1, dump(2)
};

const std::vector<CorpusEntry>& corpus_entries();

Presentation corpus_presentation(const std::string& name);

// Current scheme report for one entry (what the golden should contain).
std::string corpus_report(const CorpusEntry& entry);

// 0 on full match, 3 on any mismatch.  With dump = true prints the current
// reports instead of comparing (regeneration aid).
int run_corpus(std::ostream& out, bool dump = false);

}  // namespace ps
