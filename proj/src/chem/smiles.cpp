#include "probqsar/chem/smiles.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace probqsar::chem {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::EmptyInput:
      return "EmptyInput";
    case ParseErrorKind::UnknownToken:
      return "UnknownToken";
    case ParseErrorKind::UnmatchedParenthesis:
      return "UnmatchedParenthesis";
    case ParseErrorKind::UnmatchedRingClosure:
      return "UnmatchedRingClosure";
    case ParseErrorKind::MultiComponentUnsupported:
      return "MultiComponentUnsupported";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, size_t offset,
                       const std::string &detail)
    : Error(std::string(to_string(kind)) + " at offset " +
            std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

namespace {

bool is_digit(char c) {
  return c >= '0' && c <= '9';
}

[[noreturn]] void fail(ParseErrorKind kind, size_t offset, const char *detail) {
  throw ParseError(kind, offset, detail);
}

std::optional<BondOrder> bond_from_char(char c) {
  switch (c) {
    case '-':
      return BondOrder::Single;
    case '=':
      return BondOrder::Double;
    case '#':
      return BondOrder::Triple;
    case ':':
      return BondOrder::Aromatic;
    case '/':
    case '\\':
      return BondOrder::Single;  // stereo direction discarded
    default:
      return std::nullopt;
  }
}

// [isotope? symbol chirality? Hcount? charge?]
Atom parse_bracket_atom(std::string_view s, size_t &pos) {
  const size_t start = pos;
  size_t j = pos + 1;
  auto need = [&](size_t at) {
    if (at >= s.size()) {
      fail(ParseErrorKind::UnknownToken, start, "unterminated bracket atom");
    }
  };

  Atom atom;

  size_t digits_start = j;
  while (j < s.size() && is_digit(s[j])) {
    ++j;
  }
  if (j > digits_start) {
    if (j - digits_start > 3) {
      fail(ParseErrorKind::UnknownToken, digits_start, "isotope too long");
    }
    int iso = 0;
    for (size_t k = digits_start; k < j; ++k) {
      iso = iso * 10 + (s[k] - '0');
    }
    atom.isotope = iso;
  }

  need(j);
  if (std::islower(static_cast<unsigned char>(s[j]))) {
    std::string_view two = s.substr(j, 2);
    if (two == "se" || two == "as") {
      atom.element = two == "se" ? 34 : 33;
      atom.aromatic = true;
      j += 2;
    } else {
      switch (s[j]) {
        case 'b':
          atom.element = 5;
          break;
        case 'c':
          atom.element = 6;
          break;
        case 'n':
          atom.element = 7;
          break;
        case 'o':
          atom.element = 8;
          break;
        case 'p':
          atom.element = 15;
          break;
        case 's':
          atom.element = 16;
          break;
        default:
          fail(ParseErrorKind::UnknownToken, j, "unknown aromatic element");
      }
      atom.aromatic = true;
      j += 1;
    }
  } else if (std::isupper(static_cast<unsigned char>(s[j]))) {
    int z = 0;
    if (j + 1 < s.size() &&
        std::islower(static_cast<unsigned char>(s[j + 1]))) {
      z = element_from_symbol(s.substr(j, 2));  // longest match first
    }
    if (z != 0) {
      j += 2;
    } else {
      z = element_from_symbol(s.substr(j, 1));
      if (z == 0) {
        fail(ParseErrorKind::UnknownToken, j, "unknown element symbol");
      }
      j += 1;
    }
    atom.element = z;
  } else {
    fail(ParseErrorKind::UnknownToken, j, "expected element symbol");
  }

  // chirality, discarded
  if (j < s.size() && s[j] == '@') {
    ++j;
    if (j < s.size() && s[j] == '@') {
      ++j;
    }
  }

  need(j);
  if (s[j] == 'H') {
    ++j;
    int count = 1;
    if (j < s.size() && is_digit(s[j])) {
      count = 0;
      while (j < s.size() && is_digit(s[j])) {
        count = count * 10 + (s[j] - '0');
        ++j;
      }
    }
    atom.explicit_h = count;
  } else {
    atom.explicit_h = 0;  // bracket atom without H field has zero hydrogens
  }

  if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
    const char sign_char = s[j];
    const size_t charge_start = j;
    const int sign = sign_char == '+' ? 1 : -1;
    ++j;
    int magnitude = 1;
    if (j < s.size() && is_digit(s[j])) {
      magnitude = 0;
      while (j < s.size() && is_digit(s[j])) {
        magnitude = magnitude * 10 + (s[j] - '0');
        if (magnitude > 99) {
          fail(ParseErrorKind::UnknownToken, charge_start, "charge too long");
        }
        ++j;
      }
    } else {
      while (j < s.size() && s[j] == sign_char) {
        ++magnitude;
        ++j;
      }
    }
    if (magnitude > 15) {
      fail(ParseErrorKind::UnknownToken, charge_start, "charge out of range");
    }
    atom.formal_charge = sign * magnitude;
  }

  need(j);
  if (s[j] != ']') {
    fail(ParseErrorKind::UnknownToken, j, "expected ']'");
  }
  pos = j + 1;
  return atom;
}

}  // namespace

Molecule parse_smiles(std::string_view input) {
  if (input.empty()) {
    fail(ParseErrorKind::EmptyInput, 0, "empty SMILES");
  }

  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::set<std::pair<int, int>> seen_bonds;
  int prev_atom = -1;
  std::optional<BondOrder> pending_bond;
  size_t pending_bond_offset = 0;
  std::vector<std::pair<int, size_t>> paren_stack;  // (return atom, '(' offset)

  struct RingOpen {
    int atom;
    std::optional<BondOrder> order;
    size_t offset;
  };
  std::map<int, RingOpen> open_rings;

  auto add_bond = [&](int a, int b, std::optional<BondOrder> order,
                      size_t offset) {
    if (a == b) {
      fail(ParseErrorKind::UnmatchedRingClosure, offset,
           "ring closure bonds an atom to itself");
    }
    auto key = std::minmax(a, b);
    if (!seen_bonds.insert(key).second) {
      fail(ParseErrorKind::UnmatchedRingClosure, offset,
           "ring closure duplicates an existing bond");
    }
    BondOrder resolved =
        order.value_or(atoms[a].aromatic && atoms[b].aromatic
                           ? BondOrder::Aromatic
                           : BondOrder::Single);
    bonds.push_back(Bond{a, b, resolved});
  };

  auto attach_atom = [&](Atom atom, size_t offset) {
    atoms.push_back(atom);
    const int idx = static_cast<int>(atoms.size()) - 1;
    if (prev_atom >= 0) {
      std::optional<BondOrder> order = pending_bond;
      pending_bond.reset();
      add_bond(prev_atom, idx, order, offset);
    }
    prev_atom = idx;
  };

  auto close_or_open_ring = [&](int ring, size_t offset) {
    auto it = open_rings.find(ring);
    if (it == open_rings.end()) {
      std::optional<BondOrder> order = pending_bond;
      pending_bond.reset();
      open_rings[ring] = RingOpen{prev_atom, order, offset};
      return;
    }
    RingOpen open = it->second;
    open_rings.erase(it);
    std::optional<BondOrder> order = open.order;
    if (pending_bond) {
      if (order && *order != *pending_bond) {
        fail(ParseErrorKind::UnknownToken, offset,
             "conflicting ring bond orders");
      }
      order = pending_bond;
      pending_bond.reset();
    }
    add_bond(open.atom, prev_atom, order, offset);
  };

  size_t i = 0;
  while (i < input.size()) {
    const char ch = input[i];
    if (ch == '(') {
      if (prev_atom < 0) {
        fail(ParseErrorKind::UnknownToken, i, "branch before any atom");
      }
      if (pending_bond) {
        fail(ParseErrorKind::UnknownToken, i, "bond symbol before '('");
      }
      paren_stack.emplace_back(prev_atom, i);
      ++i;
    } else if (ch == ')') {
      if (pending_bond) {
        fail(ParseErrorKind::UnknownToken, pending_bond_offset,
             "dangling bond symbol");
      }
      if (paren_stack.empty()) {
        fail(ParseErrorKind::UnmatchedParenthesis, i, "')' without '('");
      }
      prev_atom = paren_stack.back().first;
      paren_stack.pop_back();
      ++i;
    } else if (ch == '.') {
      fail(ParseErrorKind::MultiComponentUnsupported, i,
           "multi-component SMILES are not supported");
    } else if (auto order = bond_from_char(ch)) {
      if (prev_atom < 0) {
        fail(ParseErrorKind::UnknownToken, i, "bond symbol before any atom");
      }
      if (pending_bond) {
        fail(ParseErrorKind::UnknownToken, i, "two bond symbols in a row");
      }
      pending_bond = order;
      pending_bond_offset = i;
      ++i;
    } else if (is_digit(ch) || ch == '%') {
      if (prev_atom < 0) {
        fail(ParseErrorKind::UnknownToken, i, "ring closure before any atom");
      }
      int ring = 0;
      const size_t tok_start = i;
      if (ch == '%') {
        if (i + 1 >= input.size() || !is_digit(input[i + 1])) {
          fail(ParseErrorKind::UnknownToken, i + 1,
               "'%' must be followed by two digits");
        }
        if (i + 2 >= input.size() || !is_digit(input[i + 2])) {
          fail(ParseErrorKind::UnknownToken, i + 2,
               "'%' must be followed by two digits");
        }
        ring = (input[i + 1] - '0') * 10 + (input[i + 2] - '0');
        i += 3;
      } else {
        ring = ch - '0';
        i += 1;
      }
      close_or_open_ring(ring, tok_start);
    } else if (ch == '[') {
      Atom atom = parse_bracket_atom(input, i);
      attach_atom(atom, i);
    } else {
      Atom atom;
      std::string_view two = input.substr(i, 2);
      if (two == "Cl" || two == "Br") {
        atom.element = two == "Cl" ? 17 : 35;
        attach_atom(atom, i);
        i += 2;
        continue;
      }
      switch (ch) {
        case 'B':
          atom.element = 5;
          break;
        case 'C':
          atom.element = 6;
          break;
        case 'N':
          atom.element = 7;
          break;
        case 'O':
          atom.element = 8;
          break;
        case 'P':
          atom.element = 15;
          break;
        case 'S':
          atom.element = 16;
          break;
        case 'F':
          atom.element = 9;
          break;
        case 'I':
          atom.element = 53;
          break;
        case 'b':
          atom.element = 5;
          atom.aromatic = true;
          break;
        case 'c':
          atom.element = 6;
          atom.aromatic = true;
          break;
        case 'n':
          atom.element = 7;
          atom.aromatic = true;
          break;
        case 'o':
          atom.element = 8;
          atom.aromatic = true;
          break;
        case 'p':
          atom.element = 15;
          atom.aromatic = true;
          break;
        case 's':
          atom.element = 16;
          atom.aromatic = true;
          break;
        default:
          fail(ParseErrorKind::UnknownToken, i, "unrecognized character");
      }
      attach_atom(atom, i);
      ++i;
    }
  }

  if (pending_bond) {
    fail(ParseErrorKind::UnknownToken, pending_bond_offset,
         "dangling bond symbol");
  }
  if (!paren_stack.empty()) {
    fail(ParseErrorKind::UnmatchedParenthesis, paren_stack.front().second,
         "'(' without ')'");
  }
  if (!open_rings.empty()) {
    size_t first = input.size();
    for (const auto &[ring, open] : open_rings) {
      first = std::min(first, open.offset);
    }
    fail(ParseErrorKind::UnmatchedRingClosure, first,
         "ring closure digit never matched");
  }
  if (atoms.empty()) {
    fail(ParseErrorKind::EmptyInput, 0, "no atoms");
  }
  return Molecule(std::move(atoms), std::move(bonds), std::string(input));
}

}  // namespace probqsar::chem
