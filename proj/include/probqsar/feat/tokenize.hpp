#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace probqsar::feat {

// Greedy longest-match SMILES tokenization: bracket atoms "[...]" and "%nn"
// ring closures are single tokens, Cl/Br are two characters, everything
// else one character. The input must already parse (tokenization is only
// defined for well-formed SMILES); parse failures propagate. Concatenating
// the tokens reproduces the input exactly.
std::vector<std::string> tokenize_smiles(std::string_view input);

std::string detokenize(const std::vector<std::string> &tokens);

}  // namespace probqsar::feat
