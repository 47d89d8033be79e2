#ifndef SPINGIBBS_MODEL_HPP
#define SPINGIBBS_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spingibbs {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DegenerateAngleError : std::domain_error {
    explicit DegenerateAngleError(const std::string& msg) : std::domain_error(msg) {}
};
struct NonPositiveBetaError : std::domain_error {
    explicit NonPositiveBetaError(const std::string& msg) : std::domain_error(msg) {}
};
struct EmptyWordError : std::invalid_argument {
    EmptyWordError() : std::invalid_argument("word must be nonempty") {}
};
struct WordTooShortError : std::invalid_argument {
    explicit WordTooShortError(const std::string& msg) : std::invalid_argument(msg) {}
};
struct WordTooLongError : std::invalid_argument {
    explicit WordTooLongError(const std::string& msg) : std::invalid_argument(msg) {}
};
struct DepthTooLargeError : std::invalid_argument {
    explicit DepthTooLargeError(const std::string& msg) : std::invalid_argument(msg) {}
};
struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Words over the alphabet {1,2}
// ---------------------------------------------------------------------------

// A finite cylinder word.  Symbols are 1 or 2; construction validates.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<int> symbols);
    Word(std::initializer_list<int> symbols) : Word(std::vector<int>(symbols)) {}

    // Dyadic code: symbol 1 -> bit 0, symbol 2 -> bit 1, most significant
    // bit first (the first symbol is the top bit).
    static Word from_code(std::uint32_t code, int length);
    std::uint32_t code() const;

    // Parses strings like "1121".
    static Word parse(const std::string& digits);
    std::string str() const;

    int size() const { return static_cast<int>(s_.size()); }
    bool empty() const { return s_.empty(); }
    int operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }

    Word suffix(int from) const;   // drops the first `from` symbols
    Word reversed() const;
    Word flipped() const;          // 1 <-> 2
    Word concat(const Word& other) const;
    Word repeated(int times) const;

    bool operator==(const Word& o) const { return s_ == o.s_; }

    const std::vector<std::uint8_t>& raw() const { return s_; }

  private:
    std::vector<std::uint8_t> s_;  // values 1 and 2
};

// Finite encoding of an eventually periodic point of {1,2}^N:
// preperiod . period . period . ...
struct EventualSeq {
    Word preperiod;   // may be empty
    Word period;      // nonempty

    // Prefix of the encoded sequence with at least n symbols (whole periods).
    Word prefix(int n) const;
};

// ---------------------------------------------------------------------------
// Model parameters
// ---------------------------------------------------------------------------

// Derived scalars for the inverse-temperature-beta chain at angle theta.
//   beta1     = sin(2 theta)
//   phi       = 2 / (e^{2 beta} + 1), in (0,1)
//   tanh_term = phi - 1 = -tanh(beta)
// and the recurrence coefficient tables
//   a(k,k) = phi/2,          a(k0!=k1) = 1 - phi/2
//   b(k,k) = (1-phi)(1-beta1^2)/4,   b(k0!=k1) = -b(k,k)
struct ModelParams {
    double theta = 0;
    double beta = 0;
    double beta1 = 0;
    double phi = 0;
    double tanh_term = 0;
    double a_table[2][2] = {};
    double b_table[2][2] = {};

    double a(int k0, int k1) const { return a_table[k0 - 1][k1 - 1]; }
    double b(int k0, int k1) const { return b_table[k0 - 1][k1 - 1]; }
    double beta_sym(int k) const { return k == 1 ? beta1 : -beta1; }
};

// Angle tolerance for Assumption A: theta in (0, pi/2), theta != pi/4.
inline constexpr double kAngleTol = 1e-9;

void validate_theta(double theta);

ModelParams make_params(double theta, double beta);

}  // namespace spingibbs

#endif
