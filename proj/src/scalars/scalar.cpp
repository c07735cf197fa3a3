#include <shv/scalars/scalar.hpp>

#include <cctype>

namespace shv {

const char* mode_name(ScalarMode m) { return m == ScalarMode::Specialized ? "specialized" : "symbolic"; }

ScalarMode parse_mode(const std::string& s) {
    if (s == "specialized") return ScalarMode::Specialized;
    if (s == "symbolic") return ScalarMode::Symbolic;
    throw std::invalid_argument("unknown scalar mode '" + s + "'");
}

const Rational& Scalar::rational() const {
    if (auto q = std::get_if<Rational>(&v_)) return *q;
    throw ModeMismatch("symbolic scalar used where a specialized value is required");
}

const RationalFunction& Scalar::function() const {
    if (auto f = std::get_if<RationalFunction>(&v_)) return *f;
    throw ModeMismatch("specialized scalar used where a symbolic value is required");
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.mode() != b.mode())
        throw ModeMismatch(std::string("cannot combine ") + mode_name(a.mode()) + " and " + mode_name(b.mode()) +
                           " scalars");
    if (a.mode() == ScalarMode::Specialized) return Scalar(op(a.rational(), b.rational()));
    return Scalar(op(a.function(), b.function()));
}

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse '" + s_ + "': " + why + " at position " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc *= d.constant_value().inverse();
            } else {
                return acc;
            }
        }
    }
    Polynomial factor() {
        if (eat('-')) return -factor();
        Polynomial base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, i_ - start)));
        }
        return base;
    }
    Polynomial primary() {
        skip();
        if (eat('(')) {
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Polynomial(Rational::parse(s_.substr(start, i_ - start)));
        }
        if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Polynomial::variable(parse_parameter(s_.substr(start, i_ - start)));
        }
        fail("expected a number, a parameter or '('");
    }
};

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}
Scalar Scalar::operator-() const {
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}
bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
        throw ModeMismatch("cannot compare scalars of different modes");
    return a.v_ == b.v_;
}

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

Scalar Scalar::parse(const std::string& text, ScalarMode mode) {
    if (mode == ScalarMode::Specialized) return Scalar(Rational::parse(text));
    return Scalar(RationalFunction(parse_polynomial(text)));
}

Rational Scalar::evaluate(const Assignment& values) const {
    if (mode() == ScalarMode::Specialized) return rational();
    return function().evaluate(values);
}

std::string Scalar::to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace shv
