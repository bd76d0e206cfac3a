#include "weylphi/exceptional_data.hpp"

#include <map>
#include "json.hpp"
#include <stdexcept>

namespace weylphi {

namespace {

using F = Family;

const std::vector<ExceptionalRow> kRows = {
    {F::G2, 2, "6", "", "G2", "always"},
    {F::G2, 4, "3", "", "G2(a1)", "always"},
    {F::G2, 6, "2.2", "", "~A1", "p=3"},

    {F::F4, 4, "12", "", "F4", "always"},
    {F::F4, 6, "8", "", "F4(a1)", "always"},
    {F::F4, 8, "6.6", "", "F4(a2)", "always"},
    {F::F4, 10, "2.2.6", "'", "B3", "none"},
    {F::F4, 10, "2.2.6", "''", "C3", "none"},
    {F::F4, 12, "4.4", "", "F4(a3)", "always"},
    {F::F4, 14, "2.2.4", "", "C3(a1)", "p=2"},
    {F::F4, 16, "3.3", "", "~A2+A1", "p=2"},
    {F::F4, 24, "2.2.2.2", "", "A1+~A1", "none"},

    {F::E6, 6, "3.12", "", "E6", "always"},
    {F::E6, 8, "9", "", "E6(a1)", "always"},
    {F::E6, 12, "3.6.6", "", "A5+A1", "always"},
    {F::E6, 14, "2.2.3.6", "", "A5", "none"},
    {F::E6, 24, "3.3.3", "", "2A2+A1", "none"},

    {F::E7, 7, "2.18", "", "E7", "always"},
    {F::E7, 9, "2.14", "", "E7(a1)", "always"},
    {F::E7, 11, "2.6.12", "", "E7(a2)", "always"},
    {F::E7, 13, "2.6.10", "", "D6+A1", "always"},
    {F::E7, 15, "2.2.2.10", "", "D6", "none"},
    {F::E7, 17, "2.4.8", "", "D6(a1)+A1", "always"},
    {F::E7, 21, "2.6.6.6", "", "D6(a2)+A1", "always"},
    {F::E7, 23, "2.2.2.6.6", "", "D6(a2)", "none"},
    {F::E7, 25, "2.3.3.6", "", "(A5+A1)''", "none"},
    {F::E7, 31, "2.2.2.2.2.6", "", "D4+A1", "none"},
    {F::E7, 33, "2.2.2.4.4", "", "A3+A2+A1", "none"},
    {F::E7, 63, "2.2.2.2.2.2.2", "", "4A1", "none"},

    {F::E8, 8, "30", "", "E8", "always"},
    {F::E8, 10, "24", "", "E8(a1)", "always"},
    {F::E8, 12, "20", "", "E8(a2)", "always"},
    {F::E8, 14, "6.18", "", "E7+A1", "always"},
    {F::E8, 16, "15", "", "D8", "always"},
    {F::E8, 16, "2.2.18", "", "E7", "none"},
    {F::E8, 18, "2.2.14", "", "E7(a1)+A1", "always"},
    {F::E8, 20, "12.12", "", "D8(a1)", "always"},
    {F::E8, 22, "4.4.12", "", "D7", "none"},
    {F::E8, 22, "6.6.12", "", "E7(a2)+A1", "always"},
    {F::E8, 24, "10.10", "", "A8", "always"},
    {F::E8, 24, "2.2.6.12", "", "E7(a2)", "none"},
    {F::E8, 26, "3.3.12", "", "E6+A1", "none"},
    {F::E8, 26, "2.2.6.10", "", "D7(a1)", "p=2"},
    {F::E8, 28, "3.9", "", "D8(a3)", "always"},
    {F::E8, 30, "8.8", "", "A7", "p=3"},
    {F::E8, 32, "2.2.2.2.10", "", "D6", "none"},
    {F::E8, 34, "2.2.4.8", "", "D5+A2", "p=2"},
    {F::E8, 40, "6.6.6.6", "", "2A4", "always"},
    {F::E8, 42, "2.2.6.6.6", "", "A5+A2", "none"},
    {F::E8, 44, "2.2.2.2.6.6", "", "D6(a2)", "none"},
    {F::E8, 44, "3.3.6.6", "", "A5+2A1", "none"},
    {F::E8, 46, "2.2.3.3.6", "", "(A5+A1)'", "none"},
    {F::E8, 46, "2.2.4.4.6", "", "D5(a1)+A2", "none"},
    {F::E8, 48, "5.5", "", "A4+A3", "none"},
    {F::E8, 60, "4.4.4.4", "", "2A3", "none"},
    {F::E8, 64, "2.2.2.2.2.2.6", "", "D4+A1", "none"},
    {F::E8, 66, "2.2.2.2.4.4", "", "A3+A2+A1", "none"},
    {F::E8, 80, "3.3.3.3", "", "2A2+2A1", "none"},
    {F::E8, 120, "2.2.2.2.2.2.2.2", "", "4A1", "none"},
};

// Generator numbering: G2 with 1 short; F4 1-2=>3-4; E_n with 1-3-4-5-..., 2-4.
const std::map<Family, std::vector<std::string>> kWords = {
    {F::G2, {"(1)(2)", "(121)(2)", "(12121)(2)"}},
    {F::F4,
     {"(1)(2)(3)(4)", "(1)(232)(3)(4)", "(121)(323)(4)(3)", "(1)(2)(3234323)(4)",
      "(4)(3)(2321232)(1)", "(12321)(23432)(3)(4)", "(2)(12321)(3234323)(4)",
      "(2324312134232)(3)(1)(4)", "(432134232431234)(12321)(232)(3)"}},
    {F::E6,
     {"(1)(2)(3)(4)(5)(6)", "(1)(3)(4)(2)(454)(6)", "(1)(3)(4)(2345432)(6)(5)",
      "(1)(2)(3)(432454234)(5)(6)", "(4354132456542314534)(2)(1)(3)(5)(6)"}},
};

}  // namespace

const std::vector<ExceptionalRow>& exceptional_table(Family f) {
  static const std::map<Family, std::vector<ExceptionalRow>> by_family = [] {
    std::map<Family, std::vector<ExceptionalRow>> m;
    for (const auto& r : kRows) m[r.family].push_back(r);
    return m;
  }();
  auto it = by_family.find(f);
  if (it == by_family.end()) throw std::invalid_argument("no exceptional table for " + family_name(f));
  return it->second;
}

const ExceptionalRow& exceptional_lookup(Family f, const CycloSignature& sig,
                                         const std::string& disc) {
  const std::string key = sig.key();
  const ExceptionalRow* hit = nullptr;
  int count = 0;
  for (const auto& r : exceptional_table(f)) {
    if (r.sig_key != key) continue;
    ++count;
    if (r.disc == disc) hit = &r;
  }
  if (count == 0) throw std::out_of_range("no elliptic row for " + family_name(f) + ":" + key);
  if (!hit) {
    if (count > 1) throw std::invalid_argument("signature " + key + " needs a discriminator");
    throw std::out_of_range("unknown discriminator '" + disc + "' for " + key);
  }
  return *hit;
}

std::uint64_t exceptional_table_checksum() {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& r : kRows)
    feed(family_name(r.family) + "|" + std::to_string(r.d) + "|" + r.sig_key + "|" + r.disc + "|" +
         r.name + "|" + r.dist + "\n");
  return h;
}

std::string exceptional_table_jsonl() {
  std::string out;
  for (const auto& r : kRows) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["d"] = r.d;
    nlohmann::json sig = nlohmann::json::array();
    for (auto [d, m] : r.signature().mult) sig.push_back({d, m});
    j["signature"] = sig;
    j["discriminator"] = r.disc;
    j["name"] = r.name;
    j["dist"] = r.dist;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<std::vector<int>> parse_block_word(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  bool open = false;
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw std::invalid_argument("nested block in " + text);
      blocks.emplace_back();
      open = true;
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("unbalanced block in " + text);
      open = false;
    } else if (ch >= '1' && ch <= '9') {
      if (!open) throw std::invalid_argument("letter outside block in " + text);
      blocks.back().push_back(ch - '0');
    } else if (ch != ' ') {
      throw std::invalid_argument("bad character in block word " + text);
    }
  }
  if (open) throw std::invalid_argument("unterminated block in " + text);
  return blocks;
}

std::vector<std::vector<std::vector<int>>> exceptional_excellent_words(Family f) {
  std::vector<std::vector<std::vector<int>>> out;
  auto it = kWords.find(f);
  if (it == kWords.end()) return out;
  for (const auto& w : it->second) out.push_back(parse_block_word(w));
  return out;
}

}  // namespace weylphi
