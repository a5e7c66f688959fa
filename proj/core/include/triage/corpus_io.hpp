#pragma once

#include <string>

#include "triage/claim.hpp"

namespace triage {

enum class CorpusFormat { jsonl, csv };

// Reads claims from disk. JSONL records carry id/text/lang/group/class
// (lang optional, blank or absent maps to unk); CSV needs the header row
// `id,text,lang,group,class`. Malformed records and duplicate ids throw
// IoError with the line number.
Corpus ingest(const std::string& path, CorpusFormat format);

// One JSON object per line, fixed field order; byte-deterministic.
void write_jsonl(const Corpus& corpus, const std::string& path);

// Label space and language inventory sidecar (written next to the corpus so
// sparse samples keep their full label space).
std::string corpus_meta_path(const std::string& corpus_path);
void write_meta(const Corpus& corpus, const std::string& path);

// JSONL ingest plus the sidecar meta when present.
Corpus read_corpus(const std::string& path);

}  // namespace triage
