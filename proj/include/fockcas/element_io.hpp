#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fockcas/fock.hpp"

namespace fockcas {

// Element grammar shared by the CLI, tests and serialization:
//
//   element  := term (('+'|'-') term)*
//   term     := [rational '*'] ('h(' idx ')' ['^' nat])* SYMBOL
//   idx      := '-'nat | '-'nat'/2'
//   rational := int['/'nat]
//
// SYMBOL is "vac" for algebra elements and "u" for module vectors. Examples:
// "1/2*h(-1)^2 vac", "h(-3/2) u". Whitespace between tokens is ignored; a
// leading sign on the first term is accepted. format_element's output parses
// back to an equal vector.

/// Parses an element. If `expect` is set the result must live in that sector;
/// otherwise the sector is inferred from the indices (untwisted when there are
/// none). Throws ParseError / SectorError.
FockVector parse_element(std::string_view text,
                         std::optional<Sector> expect = std::nullopt,
                         std::string_view symbol = "vac");

std::string format_monomial(const Monomial& m, std::string_view symbol = "vac");

std::string format_element(const FockVector& v, std::string_view symbol = "vac");

/// Parses "3", "-2", "3/2", "-1/2" into a half-integer.
HalfInt parse_halfint(std::string_view text);

} // namespace fockcas
