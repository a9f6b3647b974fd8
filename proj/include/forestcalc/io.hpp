#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "forestcalc/bseries.hpp"
#include "forestcalc/conv.hpp"

namespace forestcalc {

// Coefficient files: one "<forest>\t<coefficient>" term per line. Rational
// coefficients are "p/q"; Laurent coefficients are "z^k:p/q" pairs joined by
// commas. Header lines:
//   #truncation n      required when writing; defaults to the largest listed forest
//   #target rational|laurent
//   #window lo hi      Laurent exponent window
//   #kind general|character|infinitesimal
//   #colors c
//   #empty p/q         B-series files only
// Any other line starting with '#' is a comment, as are blank lines.
//
// Without #kind a file whose terms are all single trees is read as a
// character; a "1" line or a term with two or more trees makes it general.
// Without #target the file is Laurent when some coefficient mentions z.

using AnyFunctional = std::variant<RationalFunctional, LaurentFunctional>;

AnyFunctional parse_coefficient_file(std::string_view text);
std::string to_coefficient_file(const RationalFunctional& phi);
std::string to_coefficient_file(const LaurentFunctional& phi);

/// The rational reader rejects Laurent data with MismatchError; the Laurent
/// reader promotes rational data.
RationalFunctional parse_rational_functional(std::string_view text);
LaurentFunctional parse_laurent_functional(std::string_view text);

/// Tree terms only, plus the #empty header (default 1). The order is the
/// #truncation header.
BSeries parse_bseries_file(std::string_view text);
std::string to_bseries_file(const BSeries& alpha);

/// Whole-file helpers; failures raise IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace forestcalc
