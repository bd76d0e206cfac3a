#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylphi/cyclotomic.hpp"
#include "weylphi/weyl.hpp"

namespace weylphi {

// One elliptic class of an exceptional Weyl group together with the
// unipotent class it is sent to.
struct ExceptionalRow {
  Family family;
  int d;                // minimal length in the class
  std::string sig_key;  // cyclotomic indices with multiplicity, e.g. "2.2.6"
  std::string disc;     // "'" / "''" for the F4 pair, otherwise empty
  std::string name;     // unipotent class
  std::string dist;     // "always", "p=2", "p=3" or "none"

  CycloSignature signature() const { return CycloSignature::parse_key(sig_key); }
};

const std::vector<ExceptionalRow>& exceptional_table(Family f);
// Throws std::out_of_range for an unknown key and std::invalid_argument when
// the signature is ambiguous and no discriminator was given.
const ExceptionalRow& exceptional_lookup(Family f, const CycloSignature& sig,
                                         const std::string& disc = "");
// FNV-1a over a canonical serialization of all five tables.
std::uint64_t exceptional_table_checksum();
// One JSON object per line.
std::string exceptional_table_jsonl();

// Excellent decompositions as generator blocks, e.g. {{1},{2,3,2},{3},{4}}.
std::vector<std::vector<std::vector<int>>> exceptional_excellent_words(Family f);
std::vector<std::vector<int>> parse_block_word(const std::string& text);

}  // namespace weylphi
