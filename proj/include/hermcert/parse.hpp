#pragma once

#include <stdexcept>
#include <string>

#include "hermcert/blowup.hpp"
#include "hermcert/hermform.hpp"

namespace hermcert {

/// Parse or elaboration failure; `pos` is a 0-based byte offset into the
/// source text (already included in what()).
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t pos_);
};

struct FormExpression {
    std::string source;
    int n = 0;  // inferred variable count: variables z0..zn
    HermitianForm form;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := [rational '*'] factor ('*' factor)*
///   factor := 'sq' '(' holo ')' | '(' expr ')' ['^' uint] | 'normK' '(' uint ')'
///   holo   := signed sum of [coef '*'] monomials in z0..zn, coef rational or
///             rational-complex (a+bi, parenthesized when it is a sum)
/// Whitespace is insignificant. The variable count is inferred from the
/// largest zk mentioned; each sq argument must be homogeneous and all top-level
/// terms must elaborate to one common bidegree.
FormExpression parse_form(const std::string& text);

/// Expression whose parse elaborates to exactly P (matrix equality). Splits
/// every off-diagonal entry into sq() differences, so the output is a valid
/// round-trip witness rather than a minimal rendering.
std::string print_form(const HermitianForm& P);

/// Rational-matrix entry list: JSON array of [alpha, beta, re, im] with
/// rationals as "num/den" strings. Inverse of matrix_entries_json.
HermitianForm form_from_matrix_json(const std::string& json_text);
std::string matrix_entries_json(const HermitianForm& P);

/// A single holomorphic polynomial (the holo production), e.g. one curve
/// component. n_override forces the variable count when larger than the
/// inferred one (curve components are always binary forms).
HoloSection parse_section(const std::string& text, int n_override = -1);

/// Same grammar elaborated without homogeneity checks, over affine
/// variables with free names (x1, y2, t1, ...). Variables are indexed by
/// sorted name: letter part first, numeric suffix second.
struct MixedExpression {
    std::string source;
    std::vector<std::string> vars;
    MixedHermPoly poly;
};
MixedExpression parse_mixed_form(const std::string& text);

/// Blowup chain syntax: steps separated by '|', each a comma list of
/// substitutions old=monomial-in-new-vars, e.g.
///   "x1=y1*y2,x2=y2 | y1=t1,y2=t1*t2".
/// Step k's left-hand names must be exactly the previous step's variables
/// (the form's variables for k = 0).
struct ChainSpec {
    std::vector<std::vector<MultiIndex>> steps;
    std::vector<std::vector<std::string>> var_names;  // new variables per step
};
ChainSpec parse_chain(const std::string& text, const std::vector<std::string>& initial_vars);

}  // namespace hermcert
