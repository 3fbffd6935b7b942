#include "p1stab/objects.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace p1stab {

std::int64_t shift_of(const Indecomposable& ind) {
    return std::visit([](const auto& x) { return x.shift; }, ind);
}

Indecomposable with_shift(Indecomposable ind, std::int64_t shift) {
    std::visit([shift](auto& x) { x.shift = shift; }, ind);
    return ind;
}

std::strong_ordering compare(const Indecomposable& a, const Indecomposable& b) {
    if (auto c = shift_of(a) <=> shift_of(b); c != 0) return c;
    if (auto c = a.index() <=> b.index(); c != 0) return c;
    if (std::holds_alternative<LineBundle>(a)) {
        return std::get<LineBundle>(a).twist <=> std::get<LineBundle>(b).twist;
    }
    const auto& ta = std::get<Torsion>(a);
    const auto& tb = std::get<Torsion>(b);
    if (auto c = ta.point <=> tb.point; c != 0) return c;
    return ta.length <=> tb.length;
}

DecomposedObject::DecomposedObject(std::vector<Summand> summands) {
    for (const auto& s : summands) {
        if (s.multiplicity < 1) {
            throw std::invalid_argument("summand multiplicity must be >= 1");
        }
        if (const auto* t = std::get_if<Torsion>(&s.part); t && t->length < 1) {
            throw std::invalid_argument("torsion length must be >= 1");
        }
    }
    std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
        return compare(a.part, b.part) < 0;
    });
    for (auto& s : summands) {
        if (!summands_.empty() && summands_.back().part == s.part) {
            summands_.back().multiplicity =
                checked_add(summands_.back().multiplicity, s.multiplicity);
        } else {
            summands_.push_back(std::move(s));
        }
    }
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    DecomposedObject run() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '0') {
            ++pos_;
            skip_ws();
            expect_end();
            return DecomposedObject::zero();
        }
        std::vector<Summand> summands;
        summands.push_back(term());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            skip_ws();
            summands.push_back(term());
            skip_ws();
        }
        expect_end();
        return DecomposedObject(std::move(summands));
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("object syntax error at position " + std::to_string(pos_) +
                                    ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect_end() const {
        if (pos_ != text_.size()) {
            throw std::invalid_argument("object syntax error at position " + std::to_string(pos_) +
                                        ": unexpected trailing input");
        }
    }

    char expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        return text_[pos_++];
    }

    std::int64_t integer() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
    }

    std::string label() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected a point label");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t optional_shift() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            skip_ws();
            std::int64_t k = integer();
            skip_ws();
            expect(']');
            return k;
        }
        return 0;
    }

    Summand term() {
        std::int64_t mult = 1;
        std::size_t save = pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mult = integer();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (mult < 1) {
                    pos_ = save;
                    fail("multiplicity must be >= 1");
                }
            } else {
                pos_ = save;
                fail("expected '*' after multiplicity");
            }
        }
        if (pos_ >= text_.size()) fail("expected 'O' or 'T'");
        if (text_[pos_] == 'O') {
            ++pos_;
            std::int64_t twist = 0;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                skip_ws();
                twist = integer();
                skip_ws();
                expect(')');
            }
            return {LineBundle{twist, optional_shift()}, mult};
        }
        if (text_[pos_] == 'T') {
            ++pos_;
            skip_ws();
            expect('(');
            skip_ws();
            std::string point = label();
            skip_ws();
            expect(',');
            skip_ws();
            std::size_t len_pos = pos_;
            std::int64_t length = integer();
            if (length < 1) {
                pos_ = len_pos;
                fail("torsion length must be >= 1");
            }
            skip_ws();
            expect(')');
            return {Torsion{std::move(point), length, optional_shift()}, mult};
        }
        fail("expected 'O' or 'T'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

DecomposedObject parse_object(std::string_view text) { return Parser(text).run(); }

std::string format_indecomposable(const Indecomposable& ind) {
    std::string out;
    if (const auto* lb = std::get_if<LineBundle>(&ind)) {
        out = "O";
        if (lb->twist != 0) out += "(" + std::to_string(lb->twist) + ")";
    } else {
        const auto& t = std::get<Torsion>(ind);
        out = "T(" + t.point + "," + std::to_string(t.length) + ")";
    }
    if (std::int64_t k = shift_of(ind); k != 0) out += "[" + std::to_string(k) + "]";
    return out;
}

std::string format_object(const DecomposedObject& obj) {
    if (obj.is_zero()) return "0";
    std::string out;
    for (const auto& s : obj.summands()) {
        if (!out.empty()) out += " + ";
        if (s.multiplicity != 1) out += std::to_string(s.multiplicity) + "*";
        out += format_indecomposable(s.part);
    }
    return out;
}

DecomposedObject act_object(const DecomposedObject& obj, std::int64_t twist_by,
                            std::int64_t shift_by) {
    std::vector<Summand> out;
    out.reserve(obj.summands().size());
    for (const auto& s : obj.summands()) {
        Indecomposable part = s.part;
        if (auto* lb = std::get_if<LineBundle>(&part)) {
            lb->twist = checked_add(lb->twist, twist_by);
            lb->shift = checked_add(lb->shift, shift_by);
        } else {
            auto& t = std::get<Torsion>(part);
            t.shift = checked_add(t.shift, shift_by);
        }
        out.push_back({std::move(part), s.multiplicity});
    }
    return DecomposedObject(std::move(out));
}

KClass class_of(const Indecomposable& ind) {
    KClass c;
    if (const auto* lb = std::get_if<LineBundle>(&ind)) {
        c = {1, lb->twist};
    } else {
        c = {0, std::get<Torsion>(ind).length};
    }
    if (shift_of(ind) % 2 != 0) c = -c;
    return c;
}

KClass class_of(const DecomposedObject& obj) {
    KClass total;
    for (const auto& s : obj.summands()) {
        total = total + s.multiplicity * class_of(s.part);
    }
    return total;
}

}  // namespace p1stab
