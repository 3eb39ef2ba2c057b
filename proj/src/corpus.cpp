#include "ps/corpus.hpp"

#include "ps/parse.hpp"
#include "ps/report.hpp"
#include "ps/scheme.hpp"

// Frozen golden reports, one per presentation; regenerated with
// `pointscheme corpus --dump` and reviewed before committing.
#include "corpus_golden.inc"

namespace ps {

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> kEntries = {
      {"prop1",
       "generators: x1 x2 x3 x4\n"
       "constraint: q^2 - 1\n"
       "rel: x2*x1 - q*x1*x2\n"
       "rel: x2*x3 - x3*x2\n"
       "rel: x3*x1 - q*x1*x3\n"
       "rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3\n"
       "rel: x4*x2 - q*x2*x4\n"
       "rel: x4*x3 - q*x3*x4\n",
       kGoldenProp1},
      {"prop2",
       "generators: x1 x2 x3 x4\n"
       "rel: x1*x2 - x2*x1\n"
       "rel: x3*x2 - x2*x3\n"
       "rel: x1*x3 - x3*x1\n"
       "rel: x4*x1 - x1*x4 + q*x4*x3 - q*x1*x2\n"
       "rel: x4*x2 - x2*x4\n"
       "rel: x4*x3 - x3*x4\n",
       kGoldenProp2},
      {"prop3",
       "generators: x1 x2 x3 x4\n"
       "constraint: q + 1\n"
       "rel: x1*x2 - x2*x1\n"
       "rel: x2*x3 - x3*x2\n"
       "rel: x1*x3 - x3*x1\n"
       "rel: x1*x4 - x4*x1\n"
       "rel: x2*x4 - x4*x2 - q*x1*x1 + q*x2*x4\n"
       "rel: x4*x3 - x3*x4\n",
       kGoldenProp3},
      {"prop4",
       "generators: x1 x2 x3 x4\n"
       "rel: x1*x2 - x2*x1\n"
       "rel: x3*x2 - x2*x3\n"
       "rel: x1*x3 - x3*x1\n"
       "rel: x1*x4 - x4*x1 - x1*x1 + x4*x3\n"
       "rel: x2*x4 - x4*x2\n"
       "rel: x3*x4 - x4*x3\n",
       kGoldenProp4},
      {"prop5",
       "generators: x1 x2 x3 x4\n"
       "rel: x1*x2 - x2*x1\n"
       "rel: x2*x3 - x3*x2\n"
       "rel: x1*x3 - x3*x1\n"
       "rel: x1*x4 - x4*x1 - x1*x1 + x2*x3\n"
       "rel: x2*x4 - x4*x2\n"
       "rel: x3*x4 - x4*x3\n",
       kGoldenProp5},
      {"prop6",
       "generators: x1 x2 x3 x4\n"
       "rel: x1*x2 - x2*x1\n"
       "rel: x2*x3 - x3*x2\n"
       "rel: x1*x3 - x3*x1\n"
       "rel: x1*x4 - x4*x1\n"
       "rel: x2*x4 - x4*x2\n"
       "rel: x3*x4 - x4*x3 - x1*x1 + x2*x3\n",
       kGoldenProp6},
  };
  return kEntries;
}

Presentation corpus_presentation(const std::string& name) {
  for (const auto& e : corpus_entries()) {
    if (e.name == name) return parse_presentation(e.presentation_text);
  }
  throw Error("unknown corpus entry '" + name + "'");
}

std::string corpus_report(const CorpusEntry& entry) {
  Presentation p = parse_presentation(entry.presentation_text);
  LinearFormMatrix d = build_matrix(p);
  MinorSet ms = maximal_minors(d);
  SchemeDescription desc = decompose(ms, p.constraints());
  return scheme_json(p, ms, desc).dump(2) + "\n";
}

int run_corpus(std::ostream& out, bool dump) {
  int matched = 0;
  const auto& entries = corpus_entries();
  for (const auto& e : entries) {
    std::string current = corpus_report(e);
    if (dump) {
      out << "=== " << e.name << " ===\n" << current;
      continue;
    }
    if (current == e.golden_json) {
      out << e.name << ": ok\n";
      ++matched;
    } else {
      out << e.name << ": MISMATCH\n";
      out << "--- expected ---\n" << e.golden_json;
      out << "--- got ---\n" << current;
    }
  }
  if (dump) return 0;
  out << matched << "/" << entries.size() << " presentations match\n";
  return matched == static_cast<int>(entries.size()) ? 0 : 3;
}

}  // namespace ps
