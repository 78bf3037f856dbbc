#include "csym/symbol.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace csym {

void Symbol::add_term(int degree, cplx coeff) {
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
        if (coeff != cplx(0.0, 0.0)) coeffs_.emplace(degree, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == cplx(0.0, 0.0)) coeffs_.erase(it);
}

int Symbol::bandwidth() const {
    int bw = 0;
    for (const auto& [deg, c] : coeffs_) bw = std::max(bw, std::abs(deg));
    return bw;
}

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

    double parse_real() {
        skip_ws();
        char c = peek();
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.'))
            fail("expected a number");
        double value = 0.0;
        auto [ptr, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc())
            fail("malformed number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    int parse_exponent() {
        skip_ws();
        if (peek() == '-') fail("negative exponent; use zbar for negative degrees");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || value > 1000000) fail("exponent out of range");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    // real | imag | '(' signed-real ('+'|'-') [real] 'i' ')'
    cplx parse_coeff() {
        skip_ws();
        if (consume('(')) {
            double re_sign = 1.0;
            if (consume('-'))
                re_sign = -1.0;
            else
                consume('+');
            double re = re_sign * parse_real();
            skip_ws();
            double im_sign;
            if (consume('+'))
                im_sign = 1.0;
            else if (consume('-'))
                im_sign = -1.0;
            else
                fail("expected '+' or '-' inside complex literal");
            double im = 1.0;
            skip_ws();
            if (peek() != 'i') im = parse_real();
            if (!consume('i')) fail("expected 'i' in complex literal");
            if (!consume(')')) fail("expected ')'");
            return cplx(re, im_sign * im);
        }
        if (peek() == 'i') {
            ++pos_;
            return cplx(0.0, 1.0);
        }
        double value = parse_real();
        skip_ws();
        if (peek() == 'i') {
            ++pos_;
            return cplx(0.0, value);
        }
        return cplx(value, 0.0);
    }

    // 'z' ['^' uint] | 'zbar' ['^' uint]; returns the signed degree.
    int parse_atom() {
        skip_ws();
        if (peek() != 'z') fail("expected 'z' or 'zbar'");
        ++pos_;
        int direction = 1;
        if (text_.compare(pos_, 3, "bar") == 0) {
            pos_ += 3;
            direction = -1;
        }
        int exponent = 1;
        if (consume('^')) exponent = parse_exponent();
        return direction * exponent;
    }

    bool looks_like_atom() {
        skip_ws();
        return peek() == 'z';
    }

    bool looks_like_coeff() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i';
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

bool prints_negative(cplx z) {
    return (z.imag() == 0.0 && z.real() < 0.0) || (z.real() == 0.0 && z.imag() < 0.0);
}

std::string real_str(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

// Nonnegative-leaning coefficient text; the term separator carries the sign
// for purely real or purely imaginary negatives.
std::string coeff_str(cplx z) {
    if (z.imag() == 0.0) return real_str(z.real());
    if (z.real() == 0.0) {
        if (z.imag() == 1.0) return "i";
        if (z.imag() == -1.0) return "-i";
        return real_str(z.imag()) + "i";
    }
    std::string s = "(" + real_str(z.real());
    double im = z.imag();
    s += (im < 0.0) ? "-" : "+";
    double m = std::abs(im);
    if (m != 1.0) s += real_str(m);
    s += "i)";
    return s;
}

std::string atom_str(int degree) {
    if (degree == 0) return "";
    std::string base = degree > 0 ? "z" : "zbar";
    int e = std::abs(degree);
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

Symbol parse_symbol(const std::string& text) {
    Scanner sc(text);
    Symbol sym;
    if (sc.done()) sc.fail("empty input");
    bool first = true;
    while (!sc.done()) {
        double sign = 1.0;
        if (sc.consume('-'))
            sign = -1.0;
        else if (sc.consume('+'))
            sign = 1.0;
        else if (!first)
            sc.fail("expected '+' or '-' between terms");
        first = false;

        if (sc.looks_like_atom()) {
            sym.add_term(sc.parse_atom(), cplx(sign, 0.0));
            continue;
        }
        if (!sc.looks_like_coeff()) sc.fail("expected a term");
        cplx coeff = sign * sc.parse_coeff();
        if (sc.consume('*')) {
            if (!sc.looks_like_atom()) sc.fail("expected 'z' or 'zbar' after '*'");
            sym.add_term(sc.parse_atom(), coeff);
        } else {
            sym.add_term(0, coeff);
        }
    }
    return sym;
}

std::string print_symbol(const Symbol& s) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, c] : s.coefficients()) {
        cplx value = c;
        if (first) {
            if (prints_negative(value)) {
                out += "-";
                value = -value;
            }
        } else {
            if (prints_negative(value)) {
                out += " - ";
                value = -value;
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string atom = atom_str(deg);
        if (atom.empty())
            out += coeff_str(value);
        else if (value == cplx(1.0, 0.0))
            out += atom;
        else
            out += coeff_str(value) + "*" + atom;
    }
    return out;
}

cplx parse_complex(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) sc.fail("empty input");
    double sign = 1.0;
    if (sc.consume('-'))
        sign = -1.0;
    else
        sc.consume('+');
    if (!sc.looks_like_coeff()) sc.fail("expected a complex literal");
    cplx value = sign * sc.parse_coeff();
    if (!sc.done()) {
        // standalone literals also admit the unparenthesized form a+bi
        double im_sign;
        if (sc.consume('+'))
            im_sign = 1.0;
        else if (sc.consume('-'))
            im_sign = -1.0;
        else
            sc.fail("trailing characters after complex literal");
        if (value.imag() != 0.0) sc.fail("imaginary part given twice");
        double im = 1.0;
        sc.skip_ws();
        if (sc.peek() != 'i') im = sc.parse_real();
        if (!sc.consume('i')) sc.fail("expected 'i' in complex literal");
        value += cplx(0.0, im_sign * im);
        if (!sc.done()) sc.fail("trailing characters after complex literal");
    }
    return value;
}

std::string print_complex(cplx z) {
    if (prints_negative(z)) return "-" + coeff_str(-z);
    return coeff_str(z);
}

}  // namespace csym
