#include "intpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace g4 {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0) throw std::domain_error("inexact integer division");
    return a / b;
}

std::string int_to_string(Int v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string s;
    // Work with negative values so the minimum representable value is handled.
    Int x = neg ? v : -v;
    while (x != 0) {
        s.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty integer");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
        v = checked_sub(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? v : checked_sub(0, v);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), o.coeff(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(coeff(i), o.coeff(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(Int s) const {
    std::vector<Int> r(c_);
    for (auto& c : r) c = checked_mul(c, s);
    return IntPoly(std::move(r));
}

Int IntPoly::eval(Int x) const {
    Int v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = checked_add(checked_mul(v, x), c_[i]);
    return v;
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += int_to_string(c_[i]);
    }
    return s;
}

IntPoly IntPoly::parse(std::string_view text) {
    std::vector<Int> v;
    size_t start = 0;
    for (;;) {
        const size_t comma = text.find(',', start);
        v.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::pretty(char var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        Int c = c_[i];
        if (c == 0) continue;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        const Int a = c < 0 ? -c : c;
        if (a != 1 || i == 0) s += int_to_string(a);
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace g4
