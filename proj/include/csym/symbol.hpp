#pragma once

#include <map>
#include <string>

#include "csym/matrix.hpp"

namespace csym {

struct parse_error : std::runtime_error {
    parse_error(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Laurent polynomial on the unit circle, stored as degree -> coefficient.
/// Zero coefficients are never stored. Degree -k is written zbar^k.
class Symbol {
  public:
    Symbol() = default;

    void add_term(int degree, cplx coeff);

    const std::map<int, cplx>& coefficients() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    cplx coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
    }

    /// Largest |degree| with a nonzero coefficient; 0 for the zero symbol.
    int bandwidth() const;

    bool operator==(const Symbol& other) const { return coeffs_ == other.coeffs_; }

  private:
    std::map<int, cplx> coeffs_;
};

/// Grammar (whitespace insensitive):
///   symbol : ['+'|'-'] term (('+'|'-') term)*
///   term   : coeff '*' atom | atom | coeff
///   atom   : 'z' ['^' uint] | 'zbar' ['^' uint]
///   coeff  : real | imag | '(' real ('+'|'-') unsigned-imag ')'
/// where imag is 'i', '-i' or a real followed by 'i'. "zbar^k" contributes
/// degree -k; a negative exponent is rejected with a hint to use zbar.
Symbol parse_symbol(const std::string& text);

/// Canonical rendering: terms in ascending degree, parse(print(s)) == s.
std::string print_symbol(const Symbol& s);

/// Complex scalar in the same literal forms the symbol grammar accepts for
/// coefficients ("1", "-i", "0.5i", "(1+2i)").
cplx parse_complex(const std::string& text);

std::string print_complex(cplx z);

}  // namespace csym
