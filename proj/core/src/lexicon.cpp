#include "triage/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/rng.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using nlohmann::json;

// Realistic-looking inventory, most frequent first. Extended with synthetic
// codes when more languages are requested.
const char* kLanguageCodes[] = {
    "pt", "de", "en", "sv", "fi", "no", "da", "fr", "nl", "it",
    "cs", "hu", "es", "lt", "pl", "ru", "et", "lv", "sk", "sl",
    "ro", "bg", "el", "tr", "hr", "sr", "uk", "bs", "mk", "sq",
    "is", "ga", "mt", "cy", "eu", "ca", "gl", "af"};

// Uninformative stock wording prepended to a fraction of claims.
const char* kBoilerplatePhrases[] = {"customer complaint", "driver complaint",
                                     "attend to", "vehicle presenting"};

// Generic workshop vocabulary shared across class vocabularies.
const char* kSharedWords[] = {
    "check",    "replace",  "reported", "found",   "during",  "after",
    "when",     "under",    "warning",  "light",   "fault",   "issue",
    "problem",  "broken",   "loose",    "worn",    "left",    "right",
    "front",    "rear",     "upper",    "lower",   "noise",   "leak",
    "smell",    "vibration", "failure",  "error",   "stuck",   "missing",
    "damaged",  "cracked",  "bent",     "torn",    "dirty",   "empty",
    "low",      "high",     "cold",     "hot",     "slow",    "fast",
    "inspect",  "adjust",   "repair",   "renew",   "secure",  "clean",
    "test",     "measure",  "observed", "between", "inside",  "outside",
    "near",     "behind",   "again",    "still",   "very",    "new"};

// Curated root-cause terms used as the first class-signal words; synthetic
// pseudo-words continue the list for large label spaces.
const char* kSignalWords[] = {
    "pump",       "axle",       "hose",      "sensor",    "seal",
    "valve",      "oil",        "coolant",   "filter",    "clutch",
    "gearbox",    "piston",     "radiator",  "wiring",    "fuse",
    "turbo",      "injector",   "exhaust",   "mirror",    "wiper",
    "battery",    "alternator", "starter",   "bearing",   "gasket",
    "cylinder",   "spring",     "damper",    "bracket",   "cabin",
    "door",       "window",     "lamp",      "headlight", "horn",
    "compressor", "tank",       "pedal",     "steering",  "column",
    "shaft",      "joint",      "coupling",  "plastic",   "air",
    "seat",       "brake",      "disc",      "pad",       "drum",
    "caliper",    "hub",        "wheel",     "tyre",      "rim",
    "chassis",    "frame",      "bumper",    "fender",    "grille",
    "hood",       "latch",      "hinge",     "lock",      "key",
    "ignition",   "coil",       "plug",      "belt",      "pulley",
    "tensioner",  "fan",        "thermostat", "manifold",  "muffler",
    "catalyst",   "nox",        "reductant", "adblue",    "doser",
    "egr",        "cooler",     "intercooler", "throttle", "governor",
    "camshaft",   "crankshaft", "flywheel",  "sump",      "dipstick",
    "breather",   "membrane",   "diaphragm", "solenoid",  "relay",
    "harness",    "connector",  "terminal",  "bus",       "module",
    "display",    "gauge",      "cluster",   "tachograph", "speedo",
    "retarder",   "propshaft",  "kingpin",   "drawbar",   "fifthwheel",
    "ramp",       "liftgate",   "crane",     "winch",     "outrigger",
    "airbag",     "bellows",    "levelling", "kneeling",  "suspension",
    "stabilizer", "linkage",    "tierod",    "knuckle",   "yoke",
    "support",    "ring",       "washer",    "stud",      "rivet",
    "clamp",      "strap",      "grommet",   "bushing",   "sleeve"};

const char* kMasterVowels[] = {"a", "e", "i", "o", "u",  "y",  "å",
                               "ä", "ö", "ü", "é", "è",  "ø",  "í",
                               "ó", "á", "ê", "û", "ã",  "õ"};
const char* kMasterConsonants[] = {"b", "c", "d", "f", "g", "h", "j",
                                   "k", "l", "m", "n", "p", "r", "s",
                                   "t", "v", "w", "x", "z", "q"};
const char* kSuffixes[] = {"en", "os", "ak", "it", "ur", "an",
                           "el", "ov", "ne", "ta", "is", "um"};

struct Accent {
  std::vector<std::string> vowels;
  std::vector<std::string> consonants;
  std::vector<std::string> suffixes;
  double suffix_prob = 0.4;
};

Accent make_accent(std::uint64_t pack_seed, std::size_t lang_index) {
  Accent accent;
  Rng rng(mix_seed(pack_seed, 0xacce0000ULL + lang_index));

  std::vector<std::size_t> vowel_idx(std::size(kMasterVowels));
  std::vector<std::size_t> cons_idx(std::size(kMasterConsonants));
  for (std::size_t i = 0; i < vowel_idx.size(); ++i) vowel_idx[i] = i;
  for (std::size_t i = 0; i < cons_idx.size(); ++i) cons_idx[i] = i;
  rng.shuffle(vowel_idx);
  rng.shuffle(cons_idx);

  for (std::size_t i = 0; i < 4; ++i)
    accent.vowels.push_back(kMasterVowels[vowel_idx[i]]);
  for (std::size_t i = 0; i < 10; ++i)
    accent.consonants.push_back(kMasterConsonants[cons_idx[i]]);
  const std::size_t s1 = rng.next_index(std::size(kSuffixes));
  std::size_t s2 = rng.next_index(std::size(kSuffixes));
  if (s2 == s1) s2 = (s2 + 1) % std::size(kSuffixes);
  accent.suffixes.push_back(kSuffixes[s1]);
  accent.suffixes.push_back(kSuffixes[s2]);
  return accent;
}

// Deterministic pseudo-word in an accent. Draw order is fixed; any change
// here changes every generated corpus.
std::string make_word(const Accent& accent, Rng& rng) {
  const std::size_t syllables = 2 + rng.next_index(2);  // 2..3
  std::string word;
  for (std::size_t s = 0; s < syllables; ++s) {
    word += accent.consonants[rng.next_index(accent.consonants.size())];
    word += accent.vowels[rng.next_index(accent.vowels.size())];
    if (rng.next_bernoulli(0.5)) {
      word += accent.consonants[rng.next_index(accent.consonants.size())];
    }
  }
  if (rng.next_bernoulli(accent.suffix_prob)) {
    word += accent.suffixes[rng.next_index(accent.suffixes.size())];
  }
  return word;
}

// English-like pseudo-words extend the curated signal list.
std::string make_pivot_word(Rng& rng) {
  static const char* vowels[] = {"a", "e", "i", "o", "u"};
  static const char* suffix[] = {"er", "ing", "or", "le"};
  const std::size_t syllables = 2 + rng.next_index(2);
  std::string word;
  for (std::size_t s = 0; s < syllables; ++s) {
    word += kMasterConsonants[rng.next_index(std::size(kMasterConsonants))];
    word += vowels[rng.next_index(std::size(vowels))];
    if (rng.next_bernoulli(0.4)) {
      word += kMasterConsonants[rng.next_index(std::size(kMasterConsonants))];
    }
  }
  if (rng.next_bernoulli(0.5)) {
    word += suffix[rng.next_index(std::size(suffix))];
  }
  return word;
}

}  // namespace

LexiconPack LexiconPack::build(std::size_t num_languages,
                               std::size_t num_signal_words,
                               double untranslatable_rate,
                               std::uint64_t seed) {
  LexiconPack pack;
  pack.seed_ = seed;
  pack.untranslatable_rate_ = untranslatable_rate;

  for (std::size_t i = 0; i < num_languages; ++i) {
    if (i < std::size(kLanguageCodes)) {
      pack.languages_.emplace_back(kLanguageCodes[i]);
    } else {
      pack.languages_.push_back("x" + std::to_string(i + 1));
    }
  }

  // Pivot vocabulary layout: [boilerplate words][shared words][signal words].
  std::unordered_map<std::string, std::size_t> pivot_index;
  auto add_pivot = [&](const std::string& word) -> std::size_t {
    auto it = pivot_index.find(word);
    if (it != pivot_index.end()) return it->second;
    pack.pivot_vocab_.push_back(word);
    pivot_index.emplace(word, pack.pivot_vocab_.size() - 1);
    return pack.pivot_vocab_.size() - 1;
  };

  std::vector<std::vector<std::string>> phrase_tokens;
  for (const char* phrase : kBoilerplatePhrases) {
    std::vector<std::string> tokens = tokenize(phrase);
    phrase_tokens.push_back(std::move(tokens));
  }
  for (const auto& tokens : phrase_tokens) {
    for (const std::string& tok : tokens) add_pivot(tok);
  }
  pack.boilerplate_words_ = pack.pivot_vocab_.size();

  for (const char* word : kSharedWords) add_pivot(word);
  pack.shared_words_ = pack.pivot_vocab_.size() - pack.boilerplate_words_;

  for (const char* word : kSignalWords) {
    if (pack.pivot_vocab_.size() - pack.first_signal_word() >=
        num_signal_words)
      break;
    add_pivot(word);
  }
  Rng pivot_rng(mix_seed(seed, 0x70697600ULL));
  while (pack.pivot_vocab_.size() - pack.first_signal_word() <
         num_signal_words) {
    std::string word = make_pivot_word(pivot_rng);
    while (pivot_index.count(word) != 0) word = make_pivot_word(pivot_rng);
    add_pivot(word);
  }

  for (const auto& tokens : phrase_tokens) {
    std::vector<std::size_t> indices;
    for (const std::string& tok : tokens) indices.push_back(pivot_index[tok]);
    pack.boilerplate_phrases_.push_back(std::move(indices));
  }

  // Render the full vocabulary for every language. Collisions within one
  // language are resolved by regenerating, which keeps each map bijective.
  pack.renderings_.resize(pack.languages_.size());
  for (std::size_t li = 0; li < pack.languages_.size(); ++li) {
    auto& table = pack.renderings_[li];
    table.reserve(pack.pivot_vocab_.size());
    if (pack.languages_[li] == "en") {
      table = pack.pivot_vocab_;
      continue;
    }
    const Accent accent = make_accent(seed, li);
    std::unordered_map<std::string, bool> used;
    used.reserve(pack.pivot_vocab_.size() * 2);
    for (std::size_t wi = 0; wi < pack.pivot_vocab_.size(); ++wi) {
      Rng rng(mix_seed(seed ^ fnv1a64(pack.languages_[li]),
                       fnv1a64(pack.pivot_vocab_[wi])));
      std::string word = make_word(accent, rng);
      while (used.count(word) != 0) word = make_word(accent, rng);
      used.emplace(word, true);
      table.push_back(std::move(word));
    }
  }

  pack.build_inverse_maps();
  return pack;
}

void LexiconPack::build_inverse_maps() {
  inverse_.clear();
  inverse_.resize(renderings_.size());
  for (std::size_t li = 0; li < renderings_.size(); ++li) {
    inverse_[li].reserve(renderings_[li].size());
    for (std::size_t wi = 0; wi < renderings_[li].size(); ++wi) {
      inverse_[li].emplace(renderings_[li][wi], wi);
    }
  }
}

std::string LexiconPack::render(
    std::size_t lang_index, const std::vector<std::size_t>& word_indices) const {
  std::string out;
  for (std::size_t i = 0; i < word_indices.size(); ++i) {
    if (i > 0) out += ' ';
    out += renderings_[lang_index][word_indices[i]];
  }
  return out;
}

bool LexiconPack::invert_token(std::size_t lang_index, std::string_view token,
                               std::string* pivot) const {
  if (is_digits_only(token)) {
    pivot->assign(token);
    return true;
  }
  const auto& map = inverse_[lang_index];
  const auto it = map.find(std::string(token));
  if (it == map.end()) return false;
  *pivot = pivot_vocab_[it->second];
  return true;
}

double LexiconPack::coverage(std::size_t lang_index,
                             const std::vector<std::string>& tokens) const {
  if (tokens.empty()) return 0.0;
  const auto& map = inverse_[lang_index];
  std::size_t hits = 0;
  for (const std::string& tok : tokens) {
    if (is_digits_only(tok) || map.count(tok) != 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

int LexiconPack::language_index(std::string_view code) const {
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (languages_[i] == code) return static_cast<int>(i);
  }
  return -1;
}

bool LexiconPack::untranslatable(std::string_view claim_id) const {
  const std::uint64_t h = mix_seed(seed_ ^ 0x756e747200ULL, fnv1a64(claim_id));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < untranslatable_rate_;
}

std::string LexiconPack::fingerprint() const {
  std::uint64_t h = fnv1a64(std::to_string(seed_));
  for (const auto& lang : languages_) h = fnv1a64(lang, h);
  h = fnv1a64(std::to_string(pivot_vocab_.size()), h);
  return to_hex(h);
}

void LexiconPack::save(const std::string& path) const {
  json doc;
  doc["schema"] = "lexicon-pack-v1";
  doc["seed"] = seed_;
  doc["untranslatable_rate"] = untranslatable_rate_;
  doc["boilerplate_words"] = boilerplate_words_;
  doc["shared_words"] = shared_words_;
  doc["languages"] = languages_;
  doc["pivot_vocab"] = pivot_vocab_;
  doc["renderings"] = renderings_;
  doc["boilerplate_phrases"] = boilerplate_phrases_;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write lexicon pack: " + path);
  out << doc.dump(2) << '\n';
}

LexiconPack LexiconPack::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon pack: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("malformed lexicon pack " + path + ": " + e.what());
  }
  if (doc.value("schema", "") != "lexicon-pack-v1") {
    throw IoError("unsupported lexicon pack schema in " + path);
  }
  LexiconPack pack;
  pack.seed_ = doc.at("seed").get<std::uint64_t>();
  pack.untranslatable_rate_ = doc.at("untranslatable_rate").get<double>();
  pack.boilerplate_words_ = doc.at("boilerplate_words").get<std::size_t>();
  pack.shared_words_ = doc.at("shared_words").get<std::size_t>();
  pack.languages_ = doc.at("languages").get<std::vector<std::string>>();
  pack.pivot_vocab_ = doc.at("pivot_vocab").get<std::vector<std::string>>();
  pack.renderings_ =
      doc.at("renderings").get<std::vector<std::vector<std::string>>>();
  pack.boilerplate_phrases_ =
      doc.at("boilerplate_phrases")
          .get<std::vector<std::vector<std::size_t>>>();
  pack.build_inverse_maps();
  return pack;
}

}  // namespace triage
