#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "probqsar/chem/molecule.hpp"

namespace probqsar::chem {

enum class ParseErrorKind {
  EmptyInput,
  UnknownToken,
  UnmatchedParenthesis,
  UnmatchedRingClosure,
  MultiComponentUnsupported,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, size_t offset, const std::string &detail);

  ParseErrorKind kind() const { return kind_; }
  size_t offset() const { return offset_; }

private:
  ParseErrorKind kind_;
  size_t offset_;
};

// Parses the organic/bracket SMILES subset into a Molecule:
//   - organic subset B C N O P S F Cl Br I and aromatic b c n o p s
//   - bracket atoms [isotope? symbol chirality? Hcount? charge?] where the
//     symbol may be any element, or se/as/b/c/n/o/p/s for aromatic atoms
//   - branches, ring closures 0-9 and %nn, bond symbols - = # :
//   - stereo markers / \ @ @@ are accepted and discarded
// Multi-component input ('.') is rejected. Error offsets are byte positions
// in the input: unmatched '(' reports the earliest unmatched open paren,
// ')' without a partner reports its own position, an unclosed ring digit
// reports where it was opened, and a ring closure that would duplicate a
// bond or bond an atom to itself reports the closing digit. All other
// grammar violations (a bond with nothing to bond, a malformed bracket
// field, a stray character) are UnknownToken at the failing byte.
Molecule parse_smiles(std::string_view input);

}  // namespace probqsar::chem
