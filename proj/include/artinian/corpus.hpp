#pragma once

#include <string>
#include <vector>

#include "artinian/session.hpp"

namespace artinian {

enum class ExpectKind {
  SimpleSummand,  // k | syz_a(k) iff holds
  Burch,
  Golod,          // b > 0 with !holds pins the first failing degree
  Exceptional,    // at precision a
  StarPair,       // syz_a | syz_b
  StarEmpty,      // no pair up to bound a
  FibreProduct,
  Gorenstein,
  Hypersurface,
  Dimension,      // dim R == a
};

struct Expectation {
  ExpectKind kind;
  bool holds = true;
  std::size_t a = 0, b = 0;
  std::string text;
};

struct CorpusEntry {
  std::string id;
  std::string presentation;  // ring-file text; the field line is replaced per run
  std::string provenance;
  std::vector<FieldSpec> fields;
  std::vector<Expectation> expectations;
};

const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry& corpus_entry(const std::string& id);

struct ExpectationOutcome {
  std::string entry;
  std::string field;
  std::string expectation;
  bool passed = false;
  std::string observed;
  double seconds = 0;
};

std::vector<ExpectationOutcome> run_corpus_entry(const CorpusEntry& entry, const FieldSpec& field,
                                                 const DecompositionOptions& opts = {});

Json to_json(const ExpectationOutcome& o);

}  // namespace artinian
