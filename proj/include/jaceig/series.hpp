#ifndef JACEIG_SERIES_HPP
#define JACEIG_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "jaceig/rational.hpp"

namespace jaceig {

// Sparse multivariate power series over Rat, truncated by total degree.
// Exponents live in Z^nvars with every entry >= lower_bound; the default
// lower_bound 0 gives an ordinary power series, negative values admit the
// Laurent monomials that appear in intermediate eta-monomial expansions.
// Stored terms never have zero coefficients and never exceed the cap.
class TruncatedSeries {
public:
    using ExpVec = std::vector<long>;
    using TermMap = std::map<ExpVec, Rat>;

    TruncatedSeries(int nvars, long cap, long lower_bound = 0);

    static TruncatedSeries zero(int nvars, long cap, long lower_bound = 0);
    static TruncatedSeries constant(int nvars, long cap, const Rat& value);
    static TruncatedSeries monomial(int nvars, long cap, const ExpVec& exps, const Rat& coeff);

    int nvars() const { return nvars_; }
    long cap() const { return cap_; }
    long lower_bound() const { return lower_bound_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Zero for exponents not stored.
    const Rat& coeff(const ExpVec& exps) const;
    // Inserts, replaces or erases (value 0) one term; enforces the cap.
    void set_coeff(const ExpVec& exps, const Rat& value);

    Rat constant_term() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& scalar) const;
    TruncatedSeries operator-() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Multiply by a single monomial (exponent shift); the shift may be
    // negative, which lowers the bound accordingly.  The optional new cap
    // widens the result when the shift and the original cap are known to
    // bound the true support.
    TruncatedSeries shifted(const ExpVec& shift) const;
    TruncatedSeries shifted(const ExpVec& shift, long new_cap) const;

    // Series t with (*this) * t == 1 up to the cap.  The constant term must
    // be nonzero.
    TruncatedSeries reciprocal() const;

    // Drop all terms of total degree > new_cap.
    TruncatedSeries truncated(long new_cap) const;

    Rat eval(const std::vector<Rat>& point) const;
    double eval(const std::vector<double>& point) const;

    // Same variable space and identical term maps.  The caps are not part of
    // the value: compare truncations of equal cap when that matters.
    bool operator==(const TruncatedSeries& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Canonical text: terms in lexicographic exponent order, each
    // "num/den * x0^e0 x1^e1 ..." with zero exponents omitted, joined by
    // " + ".  The zero series prints "0".
    std::string to_text() const;
    static TruncatedSeries parse(const std::string& text, int nvars, long cap,
                                 long lower_bound = 0);

    static long degree_of(const ExpVec& exps) {
        long s = 0;
        for (long e : exps) s += e;
        return s;
    }

private:
    void check_same_space(const TruncatedSeries& o) const;

    int nvars_;
    long cap_;
    long lower_bound_;
    TermMap terms_;
};

inline TruncatedSeries operator*(const Rat& scalar, const TruncatedSeries& s) {
    return s * scalar;
}

} // namespace jaceig

#endif
