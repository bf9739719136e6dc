#include "lamina/io.hpp"

#include <json.hpp>

namespace lamina {

namespace {

using json = nlohmann::ordered_json;

Alphabet alphabet_from_names(const std::vector<std::string>& names) {
  Alphabet alphabet(static_cast<int>(names.size()));
  for (int g = 0; g < alphabet.rank(); ++g)
    if (names[g] != std::string(1, static_cast<char>('a' + g)))
      throw invalid_input("alphabet must list consecutive generators a, b, ...");
  return alphabet;
}

json images_to_json(const Endomorphism& phi) {
  json out = json::object();
  for (int g = 0; g < phi.alphabet().rank(); ++g)
    out[std::string(1, static_cast<char>('a' + g))] =
        to_string(phi.generator_image(g));
  return out;
}

Endomorphism images_from_json(const json& obj) {
  const int rank = static_cast<int>(obj.size());
  Alphabet alphabet(rank);
  std::vector<Word> images;
  images.reserve(rank);
  for (int g = 0; g < rank; ++g) {
    const std::string key(1, static_cast<char>('a' + g));
    if (!obj.contains(key))
      throw invalid_input("missing image for generator " + key);
    images.push_back(parse_word(alphabet, obj[key].get<std::string>()));
  }
  return Endomorphism(alphabet, std::move(images));
}

}  // namespace

std::string to_json(const FactorLanguage& language) {
  json out;
  out["alphabet"] = language.alphabet().generator_names();
  out["horizon"] = language.horizon();
  out["exact"] = language.exact();
  json words = json::array();
  language.for_each_word([&](const Word& w) { words.push_back(to_string(w)); });
  out["words"] = std::move(words);
  return out.dump();
}

FactorLanguage language_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed language JSON: ") + e.what());
  }
  const Alphabet alphabet =
      alphabet_from_names(in.at("alphabet").get<std::vector<std::string>>());
  const int horizon = in.at("horizon").get<int>();
  const bool exact = in.at("exact").get<bool>();
  LanguageBuilder builder(alphabet, horizon);
  for (const auto& item : in.at("words"))
    builder.add(parse_word(alphabet, item.get<std::string>()));
  FactorLanguage out = std::move(builder).build(exact);
  if (out.empty()) throw invalid_input("language file holds no words");
  return out;
}

std::string to_json(const Automorphism& alpha) {
  json out;
  out["images"] = images_to_json(alpha.forward());
  out["inverse"] = images_to_json(alpha.backward());
  return out.dump();
}

Automorphism automorphism_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed automorphism JSON: ") + e.what());
  }
  return Automorphism(images_from_json(in.at("images")),
                      images_from_json(in.at("inverse")));
}

std::string to_json(const BbtEstimate& estimate) {
  json out;
  out["lower"] = estimate.lower;
  out["witness_u"] = to_string(estimate.witness_u);
  out["witness_v"] = to_string(estimate.witness_v);
  out["stabilized"] = estimate.stabilized;
  out["search_radius"] = estimate.search_radius;
  return out.dump();
}

Endomorphism parse_rules(const Alphabet& alphabet, std::string_view rules) {
  std::vector<Word> images(alphabet.rank());
  std::vector<bool> seen(alphabet.rank(), false);
  std::size_t pos = 0;
  while (pos < rules.size()) {
    std::size_t end = rules.find(',', pos);
    if (end == std::string_view::npos) end = rules.size();
    const std::string_view rule = rules.substr(pos, end - pos);
    const std::size_t colon = rule.find(':');
    if (colon != 1)
      throw invalid_input("rule must look like g:image, got '" +
                          std::string(rule) + "'");
    const Letter g = alphabet.letter_from_char(rule[0]);
    if (!is_generator_letter(g))
      throw invalid_input("rules map generators, not inverses");
    images[g / 2] = parse_word(alphabet, rule.substr(2));
    seen[g / 2] = true;
    pos = end + 1;
  }
  for (int g = 0; g < alphabet.rank(); ++g)
    if (!seen[g])
      throw invalid_input(std::string("missing rule for generator ") +
                          static_cast<char>('a' + g));
  return Endomorphism(alphabet, std::move(images));
}

}  // namespace lamina
