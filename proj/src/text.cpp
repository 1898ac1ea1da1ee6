/*
   Copyright 2026 The Stickel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "stickel/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace stickel {

namespace {

// Exponents beyond this would build absurdly large dense polynomials.
constexpr std::uint64_t kMaxExponent = 1'000'000;

bool is_simple(const std::string& s) { return s.find('+') == std::string::npos; }

class Parser {
   public:
    Parser(FieldPtr coeffs, std::string_view text, const std::optional<std::string>& var)
        : k_(std::move(coeffs)), text_(text), var_(var) {}

    FieldPoly parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        FieldPoly v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_atom() {
        skip_space();
        if (pos_ == text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    FieldPoly expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        FieldPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    FieldPoly term() {
        FieldPoly acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    FieldPoly power() {
        FieldPoly base = atom();
        if (!accept('^')) return base;
        skip_space();
        const Natural e = number();
        if (e > Natural(kMaxExponent)) fail("exponent too large");
        FieldPoly result = FieldPoly::one(k_);
        for (std::uint64_t n = e.to_u64(); n > 0; n >>= 1) {
            if (n & 1) result = result * base;
            if (n > 1) base = base * base;
        }
        return result;
    }

    Natural number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Natural::parse(text_.substr(start, pos_ - start));
    }

    FieldPoly atom() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FieldPoly v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Natural n = number();
            return FieldPoly::constant(k_, k_->from_u64(n.mod_u64(k_->characteristic())));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return identifier(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    FieldPoly identifier(const std::string& name) {
        for (std::size_t lvl = 1; lvl <= k_->level(); ++lvl) {
            if (name == Field::variable_name(lvl)) {
                const FieldPtr a = k_->ancestor(lvl);
                return FieldPoly::constant(k_, k_->embed(*a, a->generator()));
            }
        }
        if (var_ && name != *var_) fail("unknown name '" + name + "'");
        if (seen_var_ && name != *seen_var_) fail("second variable '" + name + "'");
        seen_var_ = name;
        return FieldPoly::x(k_);
    }

    FieldPtr k_;
    std::string_view text_;
    std::optional<std::string> var_;
    std::optional<std::string> seen_var_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == sep && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_poly(const FieldPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    const Field& k = *f.ring();
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const auto& c = f.coeffs()[i];
        if (k.is_zero(c)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += k.format(c);
            continue;
        }
        if (!k.is_one(c)) {
            const std::string cs = k.format(c);
            out += is_simple(cs) ? cs : "(" + cs + ")";
            out += '*';
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string format_poly(const FieldPoly& f) { return format_poly(f, Field::variable_name(f.ring()->level() + 1)); }

FieldPoly parse_poly(const FieldPtr& coeffs, std::string_view text, const std::optional<std::string>& var) {
    const auto parts = split_top_level(text, ',');
    if (parts.size() == 1) return Parser(coeffs, text, var).parse();
    std::vector<Field::Element> c;
    c.reserve(parts.size());
    for (auto part : parts) {
        if (trim(part).empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
        c.push_back(parse_element(coeffs, part));
    }
    return FieldPoly(coeffs, std::move(c));
}

Field::Element parse_element(const FieldPtr& field, std::string_view text) {
    if (field->is_prime_field()) {
        const FieldPoly v = Parser(field, text, std::string("\x01")).parse();
        return v.coeff(0);
    }
    const FieldPoly v = Parser(field->base(), text, field->variable()).parse();
    return field->from_base_poly(v);
}

FieldPtr parse_descriptor(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto line : split_top_level(text, '\n')) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty field descriptor");
    const auto head = lines.front();
    if (head.substr(0, 2) != "p=") throw ParseError("descriptor must start with 'p=<prime>'");
    const Natural p = Natural::parse(trim(head.substr(2)));
    if (!p.fits_u64()) throw PreconditionViolated("characteristic exceeds 64 bits");
    FieldPtr field = Field::prime(p.to_u64());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        field = Field::extend(field, parse_poly(field, lines[i]));
    }
    return field;
}

std::string format_descriptor(const Field& field) {
    std::string out = "p=" + std::to_string(field.characteristic()) + "\n";
    for (std::size_t lvl = 1; lvl <= field.level(); ++lvl) {
        out += format_poly(field.ancestor(lvl)->defining_poly()) + "\n";
    }
    return out;
}

FieldPtr read_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open descriptor file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_descriptor(ss.str());
}

void write_descriptor_file(const std::string& path, const Field& field) {
    std::ofstream out(path);
    if (!out) throw PreconditionViolated("cannot write descriptor file '" + path + "'");
    out << format_descriptor(field);
    if (!out) throw PreconditionViolated("write failed for '" + path + "'");
}

}  // namespace stickel
