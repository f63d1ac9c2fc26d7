#include "jaceig/series.hpp"

#include <algorithm>
#include <sstream>

#include "jaceig/errors.hpp"

namespace jaceig {

TruncatedSeries::TruncatedSeries(int nvars, long cap, long lower_bound)
    : nvars_(nvars), cap_(cap), lower_bound_(lower_bound) {
    if (nvars < 0) throw DimensionMismatch("negative variable count");
}

TruncatedSeries TruncatedSeries::zero(int nvars, long cap, long lower_bound) {
    return TruncatedSeries(nvars, cap, lower_bound);
}

TruncatedSeries TruncatedSeries::constant(int nvars, long cap, const Rat& value) {
    TruncatedSeries s(nvars, cap);
    if (value != 0 && cap >= 0) s.terms_.emplace(ExpVec(nvars, 0), value);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int nvars, long cap, const ExpVec& exps,
                                          const Rat& coeff) {
    if (static_cast<int>(exps.size()) != nvars)
        throw DimensionMismatch("monomial exponent vector has wrong length");
    long lb = 0;
    for (long e : exps) lb = std::min(lb, e);
    TruncatedSeries s(nvars, cap, lb);
    if (coeff != 0 && degree_of(exps) <= cap) s.terms_.emplace(exps, coeff);
    return s;
}

const Rat& TruncatedSeries::coeff(const ExpVec& exps) const {
    static const Rat zero_rat(0);
    auto it = terms_.find(exps);
    return it == terms_.end() ? zero_rat : it->second;
}

void TruncatedSeries::set_coeff(const ExpVec& exps, const Rat& value) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw DimensionMismatch("exponent vector has wrong length");
    if (value == 0) {
        terms_.erase(exps);
        return;
    }
    if (degree_of(exps) > cap_) return;
    for (long e : exps) lower_bound_ = std::min(lower_bound_, e);
    terms_[exps] = value;
}

Rat TruncatedSeries::constant_term() const { return coeff(ExpVec(nvars_, 0)); }

void TruncatedSeries::check_same_space(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatch("series over different variable counts: " +
                                std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_same_space(o);
    TruncatedSeries out(nvars_, std::min(cap_, o.cap_), std::min(lower_bound_, o.lower_bound_));
    for (const auto& [e, c] : terms_)
        if (degree_of(e) <= out.cap_) out.terms_.emplace(e, c);
    for (const auto& [e, c] : o.terms_) {
        if (degree_of(e) > out.cap_) continue;
        auto [it, fresh] = out.terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(nvars_, cap_, lower_bound_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same_space(o);
    TruncatedSeries out(nvars_, std::min(cap_, o.cap_), lower_bound_ + o.lower_bound_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        long da = degree_of(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + degree_of(eb) > out.cap_) continue;
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.terms_.emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& scalar) const {
    TruncatedSeries out(nvars_, cap_, lower_bound_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

TruncatedSeries TruncatedSeries::shifted(const ExpVec& shift) const {
    return shifted(shift, cap_);
}

TruncatedSeries TruncatedSeries::shifted(const ExpVec& shift, long new_cap) const {
    if (static_cast<int>(shift.size()) != nvars_)
        throw DimensionMismatch("shift vector has wrong length");
    long lb_shift = 0;
    for (long e : shift) lb_shift = std::min(lb_shift, e);
    TruncatedSeries out(nvars_, new_cap, lower_bound_ + lb_shift);
    ExpVec e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + shift[i];
        if (degree_of(e) <= new_cap) out.terms_.emplace(e, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    Rat c0 = constant_term();
    if (c0 == 0) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
    // Newton doubling: t <- t(2 - s t); each round doubles the exact degree.
    TruncatedSeries t = constant(nvars_, cap_, Rat(1) / c0);
    TruncatedSeries two = constant(nvars_, cap_, Rat(2));
    long exact = 0;
    while (exact < cap_) {
        t = t * (two - *this * t);
        exact = 2 * exact + 1;
    }
    return t;
}

TruncatedSeries TruncatedSeries::truncated(long new_cap) const {
    TruncatedSeries out(nvars_, new_cap, lower_bound_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) <= new_cap) out.terms_.emplace(e, c);
    return out;
}

Rat TruncatedSeries::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= rat_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

double TruncatedSeries::eval(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (int i = 0; i < nvars_; ++i) {
            for (long k = 0; k < e[i]; ++k) term *= point[i];
            for (long k = 0; k > e[i]; --k) term /= point[i];
        }
        acc += term;
    }
    return acc;
}

std::string TruncatedSeries::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        bool head = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << (head ? " * " : " ") << "x" << i << "^" << e[i];
            head = false;
        }
    }
    return os.str();
}

TruncatedSeries TruncatedSeries::parse(const std::string& text, int nvars, long cap,
                                       long lower_bound) {
    TruncatedSeries out(nvars, cap, lower_bound);
    std::string t = text;
    if (t == "0" || t.empty()) return out;
    std::size_t pos = 0;
    while (pos != std::string::npos) {
        std::size_t next = t.find(" + ", pos);
        std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? std::string::npos : next + 3;

        std::istringstream ts(term);
        std::string coeff_tok;
        if (!(ts >> coeff_tok)) throw ParseError("empty series term");
        Rat c = parse_rat(coeff_tok);
        ExpVec e(nvars, 0);
        std::string factor;
        while (ts >> factor) {
            if (factor == "*") continue;
            if (factor.size() < 4 || factor[0] != 'x')
                throw ParseError("bad series factor '" + factor + "'");
            auto caret = factor.find('^');
            if (caret == std::string::npos) throw ParseError("bad series factor '" + factor + "'");
            int var = std::stoi(factor.substr(1, caret - 1));
            long exp = std::stol(factor.substr(caret + 1));
            if (var < 0 || var >= nvars) throw ParseError("variable index out of range in '" + factor + "'");
            e[var] = exp;
        }
        out.set_coeff(e, out.coeff(e) + c);
    }
    return out;
}

} // namespace jaceig
