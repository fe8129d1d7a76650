#include "probqsar/feat/tokenize.hpp"

#include "probqsar/chem/smiles.hpp"

namespace probqsar::feat {

std::vector<std::string> tokenize_smiles(std::string_view input) {
  chem::parse_smiles(input);  // validates; throws ParseError on bad input

  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < input.size()) {
    const char ch = input[i];
    if (ch == '[') {
      size_t close = input.find(']', i);
      tokens.emplace_back(input.substr(i, close - i + 1));
      i = close + 1;
    } else if (ch == '%') {
      tokens.emplace_back(input.substr(i, 3));
      i += 3;
    } else if (input.substr(i, 2) == "Cl" || input.substr(i, 2) == "Br") {
      tokens.emplace_back(input.substr(i, 2));
      i += 2;
    } else {
      tokens.emplace_back(1, ch);
      i += 1;
    }
  }
  return tokens;
}

std::string detokenize(const std::vector<std::string> &tokens) {
  std::string out;
  for (const auto &t : tokens) {
    out += t;
  }
  return out;
}

}  // namespace probqsar::feat
