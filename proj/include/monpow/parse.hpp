#pragma once

#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"
#include "monpow/prime_support.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace monpow {

/// An ideal parsed from text, together with the display names of the
/// variables (position i holds the name of X_{i+1}).
struct ParsedIdeal {
    MonomialIdeal ideal;
    std::vector<std::string> var_names;
};

namespace detail {

struct VariableRef {
    bool indexed = false;     // wrote x<digits>
    std::size_t index = 0;    // 1-based, for indexed form
    char letter = 0;          // for single-letter form
};

class IdealParser {
  public:
    IdealParser(std::string_view text, std::optional<std::size_t> var_override)
        : text_(text), var_override_(var_override) {}

    ParsedIdeal run() {
        std::vector<std::map<VariableRef, Integer, RefOrder>> monomials;
        monomials.push_back(parse_monomial());
        skip_ws();
        while (!eof()) {
            expect(',');
            monomials.push_back(parse_monomial());
            skip_ws();
        }

        std::size_t var_count = 0;
        if (letter_order_.empty()) {
            var_count = max_index_;
        } else {
            var_count = letter_order_.size();
        }
        if (var_override_) {
            if (*var_override_ < var_count) {
                throw ParseError("--vars is smaller than a referenced variable", text_.size());
            }
            var_count = *var_override_;
        }
        if (var_count == 0) {
            throw ParseError("no variables referenced", 1);
        }

        ParsedIdeal out;
        for (std::size_t i = 1; i <= var_count; ++i) {
            if (!letter_order_.empty() && i <= letter_order_.size()) {
                out.var_names.push_back(std::string(1, letter_order_[i - 1]));
            } else {
                out.var_names.push_back("x" + std::to_string(i));
            }
        }

        std::vector<ExponentVector> gens;
        gens.reserve(monomials.size());
        for (const auto& mono : monomials) {
            std::vector<Integer> e(var_count, Integer(0));
            for (const auto& [ref, exp] : mono) {
                e[position_of(ref) - 1] += exp;
            }
            gens.push_back(ExponentVector(std::move(e)));
        }
        out.ideal = minimalize(var_count, std::move(gens));
        return out;
    }

  private:
    struct RefOrder {
        bool operator()(const VariableRef& a, const VariableRef& b) const {
            return std::tie(a.indexed, a.index, a.letter) <
                   std::tie(b.indexed, b.index, b.letter);
        }
    };

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t here() const { return pos_ + 1; } // 1-based for messages

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", here());
        }
        ++pos_;
    }

    std::map<VariableRef, Integer, RefOrder> parse_monomial() {
        std::map<VariableRef, Integer, RefOrder> exponents;
        parse_factor(exponents);
        while (true) {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                parse_factor(exponents);
            } else {
                break;
            }
        }
        return exponents;
    }

    void parse_factor(std::map<VariableRef, Integer, RefOrder>& exponents) {
        skip_ws();
        if (eof() || !std::isalpha(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a variable", here());
        }
        std::size_t var_pos = here();
        char letter = peek();
        ++pos_;

        VariableRef ref;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (letter != 'x') {
                throw ParseError("indexed variables must be written x1, x2, ...", var_pos);
            }
            Integer idx = parse_number();
            if (idx < 1) {
                throw ParseError("variable indices start at 1", var_pos);
            }
            ref.indexed = true;
            ref.index = idx.convert_to<std::size_t>();
            saw_indexed_ = true;
            if (ref.index > max_index_) {
                max_index_ = ref.index;
            }
        } else {
            ref.letter = letter;
            saw_letter_ = true;
            bool known = false;
            for (char c : letter_order_) {
                if (c == letter) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                letter_order_.push_back(letter);
            }
        }
        if (saw_indexed_ && saw_letter_) {
            throw ParseError("cannot mix indexed and single-letter variables", var_pos);
        }

        Integer exponent = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t exp_pos = here();
            exponent = parse_number();
            if (exponent == 0) {
                throw ParseError("zero exponent is not allowed; omit the factor instead",
                                 exp_pos);
            }
        }
        exponents[ref] += exponent;
    }

    Integer parse_number() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a number", here());
        }
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            ++pos_;
        }
        return Integer(digits);
    }

    std::size_t position_of(const VariableRef& ref) const {
        if (ref.indexed) {
            return ref.index;
        }
        for (std::size_t i = 0; i < letter_order_.size(); ++i) {
            if (letter_order_[i] == ref.letter) {
                return i + 1;
            }
        }
        throw ParseError("unknown variable", 1);
    }

    std::string_view text_;
    std::optional<std::size_t> var_override_;
    std::size_t pos_ = 0;
    bool saw_indexed_ = false;
    bool saw_letter_ = false;
    std::size_t max_index_ = 0;
    std::vector<char> letter_order_;
};

} // namespace detail

/// Parse `mono ("," mono)*` where `mono := factor ("*" factor)*` and
/// `factor := var ("^" nat)?`. Variables are either x1..xr or single
/// letters (mapped by first appearance); whitespace is insignificant.
inline ParsedIdeal parse_ideal(std::string_view text,
                               std::optional<std::size_t> var_override = std::nullopt) {
    return detail::IdealParser(text, var_override).run();
}

/// Render a monomial with the given variable names ("1" for the empty one).
inline std::string format_monomial(const ExponentVector& e,
                                   const std::vector<std::string>& var_names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += i < var_names.size() ? var_names[i] : "x" + std::to_string(i + 1);
        if (e[i] != 1) {
            out += "^" + e[i].str();
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& I,
                                const std::vector<std::string>& var_names) {
    if (I.is_zero()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < I.gen_count(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_monomial(I.generators()[i], var_names);
    }
    return out + ")";
}

inline std::vector<std::string> default_var_names(std::size_t var_count) {
    std::vector<std::string> names;
    names.reserve(var_count);
    for (std::size_t i = 1; i <= var_count; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

inline std::string format_support(const PrimeSupport& M,
                                  const std::vector<std::string>& var_names) {
    std::string out = "(";
    for (std::size_t i = 0; i < M.members().size(); ++i) {
        if (i) {
            out += ",";
        }
        std::size_t idx = static_cast<std::size_t>(M.members()[i]);
        out += idx - 1 < var_names.size() ? var_names[idx - 1] : "x" + std::to_string(idx);
    }
    return out + ")";
}

} // namespace monpow
