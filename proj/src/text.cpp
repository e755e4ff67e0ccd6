#include "frobq/text.hpp"

#include <cctype>

namespace frobq {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& what) {
    throw std::invalid_argument("cannot parse element \"" + std::string(text) +
                                "\": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Consumes [+-]? digits from s. Empty digit run yields no value.
struct IntToken {
    bool present = false;
    bool negative = false;
    std::string digits;
};

IntToken take_int(std::string_view& s, bool allow_sign) {
    IntToken tok;
    std::string_view rest = s;
    if (allow_sign && !rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        tok.negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
        tok.digits.push_back(rest.front());
        rest.remove_prefix(1);
    }
    if (!tok.digits.empty()) {
        tok.present = true;
        s = rest;
    }
    return tok;
}

Int token_value(const IntToken& tok) {
    Int v(tok.digits);
    return tok.negative ? Int(-v) : v;
}

}  // namespace

QuadInt parse_element(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        bad(text, "empty input");
    }

    // First term: INT, INTr, or bare (possibly signed) r.
    bool neg_first = false;
    if (s.front() == '+' || s.front() == '-') {
        neg_first = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) {
            bad(text, "dangling sign");
        }
    }
    Int first_mag;
    bool have_digits = false;
    {
        IntToken tok = take_int(s, /*allow_sign=*/false);
        if (tok.present) {
            first_mag = Int(tok.digits);
            have_digits = true;
        }
    }
    if (!have_digits && (s.empty() || s.front() != 'r')) {
        bad(text, "expected an integer, got \"" + std::string(s) + "\"");
    }

    if (!s.empty() && s.front() == 'r') {
        // Sole irrational term: INTr or r.
        s.remove_prefix(1);
        if (!s.empty()) {
            bad(text, "trailing characters \"" + std::string(s) + "\"");
        }
        Int irr = have_digits ? first_mag : Int(1);
        return {Int(0), neg_first ? Int(-irr) : irr};
    }

    Int rat = neg_first ? Int(-first_mag) : first_mag;
    if (s.empty()) {
        return {rat, Int(0)};
    }

    // Second term must be [+-] INT? r.
    if (s.front() != '+' && s.front() != '-') {
        bad(text, "expected '+', '-' or 'r', got \"" + std::string(s) + "\"");
    }
    bool neg_second = s.front() == '-';
    s.remove_prefix(1);
    Int irr_mag(1);
    {
        IntToken tok = take_int(s, /*allow_sign=*/false);
        if (tok.present) {
            irr_mag = Int(tok.digits);
        }
    }
    if (s.empty() || s.front() != 'r') {
        bad(text, "expected 'r' after the second term, got \"" + std::string(s) + "\"");
    }
    s.remove_prefix(1);
    if (!s.empty()) {
        bad(text, "trailing characters \"" + std::string(s) + "\"");
    }
    return {rat, neg_second ? Int(-irr_mag) : irr_mag};
}

std::string format_element(const QuadInt& x) {
    if (x.irr == 0) {
        return x.rat.get_str();
    }
    if (x.rat == 0) {
        return x.irr.get_str() + "r";
    }
    Int irr_abs = abs(x.irr);
    return x.rat.get_str() + (x.irr < 0 ? "-" : "+") + irr_abs.get_str() + "r";
}

}  // namespace frobq
