#pragma once

#include <string>
#include <vector>

#include "pezzo/loci.hpp"

namespace pezzo {

/// One chart's worth of displayed generator lists from the published
/// computation, transcribed verbatim (including suspected misprints) in
/// the polynomial text grammar.  `claims_empty` records charts the text
/// argues carry no intersection instead of displaying ideals.
struct TranscriptEntry {
  std::string variety;  // "y5" | "y4"
  int lambda = 2;       // Lambda chart key (non-pivot column)
  std::string fchart;   // F chart key, e.g. "01,03,13"
  std::string ptype;    // "s31" | "s22"
  std::string source;   // section tag of the published text
  bool claims_empty = false;
  std::vector<std::string> sy, tg, ty;
};

/// The full embedded transcription table, read-only.
const std::vector<TranscriptEntry>& paper_transcript();

const TranscriptEntry* find_transcript(const std::string& variety, int lambda,
                                       const std::string& fchart,
                                       const std::string& ptype);

}  // namespace pezzo
