#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "drackn/constructions.hpp"
#include "drackn/lines.hpp"

namespace drackn {

/// Malformed input text; the message names the line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every format: a header line, a parameter line of key=value tokens, then
// whitespace-separated rows. Blank lines and lines starting with '#' are skipped.

/// DRACKN-COVER v1. Entries are '.' on the diagonal, else comma-joined exponent
/// tuples; the trivial group is written group=1 with entries 0.
ArcMatrix parse_cover(std::istream& in);
std::string emit_cover(const ArcMatrix& f);

/// SEIDEL v1. With r=<prime> entries are exponents k of zeta_r (r=2: 0 is +1,
/// 1 is -1). With r=generic entries are comma-joined rational coefficients in
/// the basis of Q(zeta_q), q given by an optional field=<prime> (default: Q).
SeidelMatrix parse_seidel(std::istream& in);
std::string emit_seidel(const SeidelMatrix& s);

/// GH v1. Rows of comma-joined exponent tuples, diagonal included.
GHMatrix parse_gh(std::istream& in);
std::string emit_gh(const GHMatrix& h);

/// FORM v1: `p= m= s=`, then s blocks of m rows of m integers.
AlternatingForm parse_form(std::istream& in);
std::string emit_form(const AlternatingForm& form);

/// SKEW v1: `t= d=`, then td rows of td codes, row i column j = e_i * e_j.
SkewProduct parse_skew(std::istream& in);
std::string emit_skew(const SkewProduct& skew);

/// LATIN v1: `t=`, then 2^t rows of 2^t field codes.
LatinSquare parse_latin(std::istream& in);
std::string emit_latin(const LatinSquare& square);

/// `# GRAM <label> i: e_0 ; e_1 ; ...` lines. Each entry is its cyclotomic
/// coefficient list, followed by `+ (coeffs)*sqrt(d)` when it has a surd part.
std::string emit_gram(const LineSet& lines, const std::string& label);

AbelianGroup parse_group(const std::string& text);

}  // namespace drackn
