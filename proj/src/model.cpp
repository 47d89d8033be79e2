#include "model.hpp"

#include <cmath>

namespace spingibbs {

Word::Word(std::vector<int> symbols) {
    s_.reserve(symbols.size());
    for (int v : symbols) {
        if (v != 1 && v != 2) {
            throw std::invalid_argument("word symbols must be 1 or 2");
        }
        s_.push_back(static_cast<std::uint8_t>(v));
    }
}

Word Word::from_code(std::uint32_t code, int length) {
    if (length < 0 || length > 31) {
        throw std::invalid_argument("word length out of range");
    }
    Word w;
    w.s_.resize(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        w.s_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(1 + ((code >> (length - 1 - i)) & 1u));
    }
    return w;
}

std::uint32_t Word::code() const {
    std::uint32_t c = 0;
    for (std::uint8_t v : s_) c = (c << 1) | (v - 1u);
    return c;
}

Word Word::parse(const std::string& digits) {
    std::vector<int> syms;
    syms.reserve(digits.size());
    for (char ch : digits) {
        if (ch == '1') syms.push_back(1);
        else if (ch == '2') syms.push_back(2);
        else throw std::invalid_argument("word string may contain only '1' and '2'");
    }
    return Word(std::move(syms));
}

std::string Word::str() const {
    std::string out;
    out.reserve(s_.size());
    for (std::uint8_t v : s_) out.push_back(static_cast<char>('0' + v));
    return out;
}

Word Word::suffix(int from) const {
    Word w;
    if (from < 0 || from > size()) throw std::invalid_argument("suffix index out of range");
    w.s_.assign(s_.begin() + from, s_.end());
    return w;
}

Word Word::reversed() const {
    Word w;
    w.s_.assign(s_.rbegin(), s_.rend());
    return w;
}

Word Word::flipped() const {
    Word w;
    w.s_.reserve(s_.size());
    for (std::uint8_t v : s_) w.s_.push_back(static_cast<std::uint8_t>(3 - v));
    return w;
}

Word Word::concat(const Word& other) const {
    Word w;
    w.s_ = s_;
    w.s_.insert(w.s_.end(), other.s_.begin(), other.s_.end());
    return w;
}

Word Word::repeated(int times) const {
    Word w;
    w.s_.reserve(s_.size() * static_cast<std::size_t>(times));
    for (int i = 0; i < times; ++i) w.s_.insert(w.s_.end(), s_.begin(), s_.end());
    return w;
}

Word EventualSeq::prefix(int n) const {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    Word w = preperiod;
    while (w.size() < n) w = w.concat(period);
    return w;
}

void validate_theta(double theta) {
    const double quarter = std::atan(1.0);  // pi/4
    if (!std::isfinite(theta) || theta < 0.0 || theta > 2.0 * quarter ||
        std::abs(theta) <= kAngleTol || std::abs(theta - 2.0 * quarter) <= kAngleTol) {
        throw DegenerateAngleError("theta must lie strictly inside (0, pi/2)");
    }
    if (std::abs(theta - quarter) <= kAngleTol) {
        throw DegenerateAngleError("theta = pi/4 is excluded (cos 2theta = 0)");
    }
}

ModelParams make_params(double theta, double beta) {
    validate_theta(theta);
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw NonPositiveBetaError("beta must be a positive finite real");
    }

    ModelParams p;
    p.theta = theta;
    p.beta = beta;
    p.beta1 = std::sin(2.0 * theta);
    p.phi = 2.0 / (std::exp(2.0 * beta) + 1.0);
    p.tanh_term = p.phi - 1.0;

    const double b_same = 0.25 * (1.0 - p.phi) * (1.0 - p.beta1 * p.beta1);
    for (int k0 = 0; k0 < 2; ++k0) {
        for (int k1 = 0; k1 < 2; ++k1) {
            if (k0 == k1) {
                p.a_table[k0][k1] = 0.5 * p.phi;
                p.b_table[k0][k1] = b_same;
            } else {
                p.a_table[k0][k1] = 1.0 - 0.5 * p.phi;
                p.b_table[k0][k1] = -b_same;
            }
        }
    }
    return p;
}

}  // namespace spingibbs
