#include "hopfd2/scalar.hpp"

#include <cctype>

namespace hopfd2 {

std::string Field::name() const {
    return p == 0 ? std::string("Q") : "F_" + std::to_string(p);
}

namespace {

mpz_class residue(const mpq_class& q, std::uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = q.get_den() % m;
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    return (num * inv) % m;
}

}  // namespace

Scalar::Scalar(const mpq_class& q, std::uint64_t p) : q_(q), p_(p) {
    q_.canonicalize();
    reduce();
}

Scalar::Scalar(long num, long den, std::uint64_t p) : q_(num, den), p_(p) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (p_ != 0) q_ = mpq_class(residue(q_, p_));
}

void Scalar::adopt(const Scalar& o) {
    if (o.p_ == p_ || o.p_ == 0) return;
    if (p_ != 0) throw FieldMismatch("scalars from different fields combined");
    p_ = o.p_;
    reduce();
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.q_ = -r.q_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    adopt(o);
    q_ += o.q_;
    if (p_) {
        if (o.p_ == 0 && o.q_.get_den() != 1) reduce();
        else {
            mpz_class m(static_cast<unsigned long>(p_));
            mpz_class n = q_.get_num() % m;
            if (n < 0) n += m;
            q_ = n;
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    adopt(o);
    q_ *= o.q_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r(*this);
    if (p_ == 0) {
        r.q_ = 1 / q_;
        return r;
    }
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class inv;
    mpz_class v = q_.get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    r.q_ = inv;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.q_ == b.q_;
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_) return false;
    return residue(a.q_, p) == residue(b.q_, p);
}

std::string Scalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& s, std::uint64_t p) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar");
    auto ok = [](const std::string& x) {
        std::size_t i = (x.size() > 0 && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!ok(num) || !ok(den)) throw std::invalid_argument("malformed scalar '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    return Scalar(q, p);
}

}  // namespace hopfd2
