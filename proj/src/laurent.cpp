#include "goodfan/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "goodfan/errors.hpp"

namespace goodfan {

namespace {

// ascending graded-lex: total degree first, then lexicographic
bool graded_lex_less(const IntVec& a, const IntVec& b) {
    Int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

Rat rat_pow(const Rat& base, const Int& e) {
    if (e == 0) return Rat(1);
    Int mag = abs(e);
    if (!mag.fits_ulong_p()) throw error("exponent magnitude too large to evaluate");
    unsigned long u = mag.get_ui();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), u);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), u);
    Rat r(num);
    r /= Rat(den);
    if (e < 0) {
        if (r == 0) throw error("zero raised to a negative power");
        return Rat(1) / r;
    }
    return r;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(int rank, const Rat& c) {
    LaurentPolynomial p(rank);
    p.add_term(IntVec(rank, Int(0)), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int rank, const IntVec& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != rank) throw shape_error("exponent rank mismatch");
    LaurentPolynomial p(rank);
    p.add_term(exps, c);
    return p;
}

void LaurentPolynomial::add_term(const IntVec& m, const Rat& c) {
    if (static_cast<int>(m.size()) != rank_) throw shape_error("exponent rank mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw shape_error("rank mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw shape_error("rank mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw shape_error("rank mismatch");
    LaurentPolynomial r(rank_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(add(ma, mb), ca * cb);
    return r;
}

bool LaurentPolynomial::operator<(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) return rank_ < o.rank_;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

LaurentPolynomial LaurentPolynomial::scale(const Rat& c) const {
    LaurentPolynomial r(rank_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::mul_monomial(const IntVec& m) const {
    if (static_cast<int>(m.size()) != rank_) throw shape_error("exponent rank mismatch");
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, m), c);
    return r;
}

std::vector<IntVec> LaurentPolynomial::support() const {
    std::vector<IntVec> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

LatticePolytope LaurentPolynomial::newton_polytope() const {
    if (is_zero()) throw error("Newton polytope undefined");
    return hull(rank_, support());
}

Rat LaurentPolynomial::eval(const RatVec& point) const {
    if (static_cast<int>(point.size()) != rank_) throw shape_error("point rank mismatch");
    for (const auto& x : point)
        if (x == 0) throw precondition_error("evaluation requires nonzero coordinates");
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
        Rat prod = c;
        for (int i = 0; i < rank_; ++i) prod *= rat_pow(point[i], m[i]);
        sum += prod;
    }
    return sum;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const IntVec, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return graded_lex_less(b->first, a->first); });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const IntVec& m = t->first;
        Rat c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string body;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] != 1) mono += "^" + m[i].get_str();
        }
        if (mono.empty()) {
            body = c.get_str();
        } else if (c == 1) {
            body = mono;
        } else {
            body = c.get_str() + "*" + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int rank;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    Int digits() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error(start, "expected digits");
        return Int(s.substr(start, pos - start));
    }

    Rat rational() {
        Int num = digits();
        if (!eof() && peek() == '/') {
            ++pos;
            size_t den_at = pos;
            Int den = digits();
            if (den == 0) throw parse_error(den_at, "zero denominator");
            return Rat(num) / Rat(den);
        }
        return Rat(num);
    }

    // variable power; accumulates into the exponent vector
    void variable(IntVec& exps) {
        ++pos;  // 'x'
        size_t idx_at = pos;
        Int idx = digits();
        if (idx < 1 || idx > rank) throw parse_error(idx_at, "variable index out of range");
        Int e(1);
        if (!eof() && peek() == '^') {
            ++pos;
            bool neg = false;
            if (!eof() && peek() == '-') {
                neg = true;
                ++pos;
            }
            e = digits();
            if (neg) e = -e;
        }
        exps[idx.get_ui() - 1] += e;
    }

    void term(LaurentPolynomial& acc, bool negative) {
        Rat coeff(1);
        IntVec exps(rank, Int(0));
        bool any = false;
        while (true) {
            ws();
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= rational();
            } else if (!eof() && peek() == 'x') {
                variable(exps);
            } else {
                throw parse_error(pos, "expected a coefficient or variable");
            }
            any = true;
            ws();
            if (!eof() && peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        (void)any;
        acc.add_term(exps, negative ? -coeff : coeff);
    }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text, int rank) {
    if (rank < 0) throw shape_error("negative rank");
    Parser p{text, 0, rank};
    LaurentPolynomial acc(rank);
    p.ws();
    if (p.eof()) throw parse_error(p.pos, "empty polynomial");
    bool neg = false;
    if (p.peek() == '+' || p.peek() == '-') {
        neg = p.peek() == '-';
        ++p.pos;
    }
    p.term(acc, neg);
    while (true) {
        p.ws();
        if (p.eof()) break;
        if (p.peek() == '+' || p.peek() == '-') {
            neg = p.peek() == '-';
            ++p.pos;
            p.term(acc, neg);
        } else {
            throw parse_error(p.pos, "unexpected character");
        }
    }
    return acc;
}

int scan_max_variable_index(const std::string& text) {
    int best = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        size_t j = i + 1;
        std::string d;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            d += text[j];
            ++j;
        }
        if (!d.empty() && d.size() <= 6) best = std::max(best, std::stoi(d));
    }
    return best;
}

LaurentPolynomial reduce_in_codirection(const LaurentPolynomial& p, const IntVec& xi) {
    if (p.is_zero()) throw error("cannot reduce the zero polynomial");
    if (static_cast<int>(xi.size()) != p.rank()) throw shape_error("covector rank mismatch");
    Int best(0);
    bool have = false;
    for (const auto& [m, c] : p.terms()) {
        Int v = dot(xi, m);
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    LaurentPolynomial r(p.rank());
    for (const auto& [m, c] : p.terms())
        if (dot(xi, m) == best) r.add_term(m, c);
    return r;
}

UnivariateForm to_univariate(const LaurentPolynomial& p, const TorusSplit& split) {
    if (p.is_zero()) throw error("cannot rewrite the zero polynomial");
    int n = split.rank();
    if (p.rank() != n) throw shape_error("rank mismatch with split");
    std::map<Int, LaurentPolynomial> by_degree;
    for (const auto& [m, c] : p.terms()) {
        Int d = dot(split.phi, m);
        IntVec kernel_part = sub(m, scale(d, split.e));
        IntVec y = push_down(kernel_part, split);
        auto it = by_degree.find(d);
        if (it == by_degree.end())
            it = by_degree.emplace(d, LaurentPolynomial(n - 1)).first;
        it->second.add_term(y, c);
    }
    // zero coefficients can arise only by cancellation inside one degree,
    // which cannot happen: distinct exponents stay distinct under the split
    Int lo = by_degree.begin()->first;
    Int hi = by_degree.rbegin()->first;
    Int span = hi - lo;
    if (!span.fits_slong_p() || span.get_si() > 1000000)
        throw shape_error("t-degree span too large");
    UnivariateForm out;
    out.poly.split = split;
    out.shift = lo;
    out.poly.coeffs.assign(span.get_si() + 1, LaurentPolynomial(n - 1));
    for (auto& [d, coeff] : by_degree) out.poly.coeffs[Int(d - lo).get_si()] = coeff;
    return out;
}

LaurentPolynomial from_univariate(const UnivariatePoly& u, const Int& shift) {
    int n = u.split.rank();
    LaurentPolynomial p(n);
    for (size_t d = 0; d < u.coeffs.size(); ++d) {
        Int deg = shift + Int(static_cast<long>(d));
        for (const auto& [y, c] : u.coeffs[d].terms()) {
            IntVec m = add(pull_up(y, u.split), scale(deg, u.split.e));
            p.add_term(m, c);
        }
    }
    return p;
}

LaurentPolynomial unit_normal_form(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    auto it = p.terms().begin();
    IntVec trailing = it->first;
    IntVec leading = it->first;
    for (const auto& [m, c] : p.terms()) {
        if (graded_lex_less(m, trailing)) trailing = m;
        if (graded_lex_less(leading, m)) leading = m;
    }
    Rat lead_coeff = p.terms().at(leading);
    return p.mul_monomial(negate(trailing)).scale(Rat(1) / lead_coeff);
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.rank() != b.rank()) throw shape_error("rank mismatch");
    int n = a.rank();
    if (a.is_zero()) return LaurentPolynomial(n);

    auto componentwise_min = [n](const LaurentPolynomial& p) {
        IntVec w = p.terms().begin()->first;
        for (const auto& [m, c] : p.terms())
            for (int i = 0; i < n; ++i) w[i] = std::min(w[i], m[i]);
        return w;
    };
    IntVec wa = componentwise_min(a), wb = componentwise_min(b);
    LaurentPolynomial A = a.mul_monomial(negate(wa));
    LaurentPolynomial B = b.mul_monomial(negate(wb));

    // lex-leading term of B (the term map is lex-ascending)
    IntVec eb = B.terms().rbegin()->first;
    Rat cb = B.terms().rbegin()->second;

    LaurentPolynomial Q(n);
    LaurentPolynomial R = A;
    while (!R.is_zero()) {
        const IntVec& lead = R.terms().rbegin()->first;
        IntVec q = sub(lead, eb);
        for (const Int& x : q)
            if (x < 0) throw error("inexact polynomial division");
        Rat qc = R.terms().rbegin()->second / cb;
        Q.add_term(q, qc);
        R = R - B.mul_monomial(q).scale(qc);
    }
    return Q.mul_monomial(sub(wa, wb));
}

}  // namespace goodfan
