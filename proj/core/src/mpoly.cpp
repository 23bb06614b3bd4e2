#include "rabin/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rabin {

bool GradedLexDesc::operator()(const ExponentVec& a, const ExponentVec& b) const {
    const std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(std::uint32_t arity, const PrimeModulus& m) : arity_(arity), mod_(m) {
    if (arity == 0) throw ArityMismatch("arity must be at least 1");
}

MultiPoly MultiPoly::constant(std::uint32_t arity, const PrimeModulus& m, std::uint64_t c) {
    MultiPoly r(arity, m);
    r.add_term(ExponentVec(arity, 0), c % m.value());
    return r;
}

MultiPoly MultiPoly::monomial(std::uint32_t arity, const PrimeModulus& m, std::uint64_t c,
                              const ExponentVec& e) {
    if (e.size() != arity) throw ArityMismatch("exponent vector length differs from arity");
    for (auto x : e)
        if (x > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^31 - 1");
    MultiPoly r(arity, m);
    r.add_term(e, c % m.value());
    return r;
}

void MultiPoly::add_term(const ExponentVec& e, std::uint64_t c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = fp::add(it->second, c, mod_.value());
    if (it->second == 0) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t MultiPoly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? 0 : terms_.begin()->second;
}

long MultiPoly::degree_in(std::uint32_t var) const {
    if (var >= arity_) throw VarOutOfRange("variable index out of range");
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return d;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;  // leading term has maximal total degree
    return static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

std::uint64_t MultiPoly::coeff(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("adding polynomials of different arity");
    if (!(mod_ == o.mod_)) throw ModulusMismatch("adding polynomials over different moduli");
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = fp::neg(c, mod_.value());
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("multiplying polynomials of different arity");
    if (!(mod_ == o.mod_)) throw ModulusMismatch("multiplying polynomials over different moduli");
    MultiPoly r(arity_, mod_);
    ExponentVec e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::uint32_t k = 0; k < arity_; ++k) {
                const std::uint64_t s = std::uint64_t{ea[k]} + eb[k];
                if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^31 - 1 in product");
                e[k] = static_cast<std::uint32_t>(s);
            }
            r.add_term(e, fp::mul(ca, cb, mod_.value()));
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return arity_ == o.arity_ && mod_ == o.mod_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(std::uint64_t c) const {
    c %= mod_.value();
    MultiPoly r(arity_, mod_);
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, fp::mul(x, c, mod_.value()));
    return r;
}

MultiPoly MultiPoly::times_monomial(std::uint64_t c, const ExponentVec& e) const {
    return *this * monomial(arity_, mod_, c, e);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        const bool has_var =
            std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x != 0; });
        std::string t;
        if (c != 1 || !has_var) t = std::to_string(c);
        for (std::uint32_t k = 0; k < arity_; ++k) {
            if (e[k] == 0) continue;
            if (!t.empty()) t += "*";
            t += "x" + std::to_string(k);
            if (e[k] > 1) t += "^" + std::to_string(e[k]);
        }
        out += t;
    }
    return out;
}

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& s, std::uint32_t arity, const PrimeModulus& m)
        : s_(s), arity_(arity), mod_(m) {}

    MultiPoly run() {
        MultiPoly r = expr();
        skip();
        if (i_ != s_.size()) throw SyntaxError("trailing input after polynomial", i_);
        return r;
    }

  private:
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

    MultiPoly expr() {
        const bool neg = eat('-');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = atom();
        while (eat('*')) acc = acc * atom();
        return acc;
    }

    MultiPoly atom() {
        skip();
        if (i_ >= s_.size()) throw SyntaxError("unexpected end of input", i_);
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            MultiPoly e = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", i_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(arity_, mod_, residue());
        if (c == 'x' || c == 't') return variable();
        throw SyntaxError("unexpected character", i_);
    }

    // integer literal reduced mod p (coefficients may be arbitrarily long)
    std::uint64_t residue() {
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = fp::add(fp::mul(v, 10 % mod_.value(), mod_.value()),
                        static_cast<std::uint64_t>(s_[i_] - '0') % mod_.value(), mod_.value());
            ++i_;
        }
        return v;
    }

    // plain integer literal for exponents and variable indices
    std::uint64_t raw_uint(std::uint64_t cap, const char* what) {
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
            if (v > cap) throw ExponentOverflow(std::string(what) + " too large");
            ++i_;
        }
        return v;
    }

    MultiPoly variable() {
        const std::size_t at = i_;
        std::uint64_t index;
        if (s_[i_] == 't') {
            ++i_;
            index = 0;  // t is an alias for x0
        } else {
            ++i_;
            if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                index = raw_uint(kMaxExponent, "variable index");
            } else {
                index = 1;  // bare x is an alias for x1
            }
        }
        if (index >= arity_) throw UnknownVariable("variable index out of range for arity", at);
        std::uint64_t e = 1;
        if (eat('^')) {
            skip();
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                throw SyntaxError("expected exponent after '^'", i_);
            e = raw_uint(kMaxExponent, "exponent");
        }
        ExponentVec ev(arity_, 0);
        ev[static_cast<std::size_t>(index)] = static_cast<std::uint32_t>(e);
        return MultiPoly::monomial(arity_, mod_, 1, ev);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::uint32_t arity_;
    PrimeModulus mod_;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::uint32_t arity, const PrimeModulus& m) {
    return PolyParser(text, arity, m).run();
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::uint32_t var) {
    const long d = f.degree_in(var);
    if (d < 0) return {};
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1,
                               MultiPoly::zero(f.arity(), f.modulus()));
    for (const auto& [e, c] : f.terms()) {
        ExponentVec stripped = e;
        const std::uint32_t k = stripped[var];
        stripped[var] = 0;
        out[k] = out[k] + MultiPoly::monomial(f.arity(), f.modulus(), c, stripped);
    }
    return out;
}

MultiPoly eval_partial(const MultiPoly& f, const std::map<std::uint32_t, std::uint64_t>& bindings) {
    const std::uint64_t p = f.modulus().value();
    for (const auto& [v, x] : bindings) {
        (void)x;
        if (v >= f.arity()) throw VarOutOfRange("binding for variable out of range");
    }
    MultiPoly r(f.arity(), f.modulus());
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t factor = c;
        ExponentVec rest = e;
        for (const auto& [v, x] : bindings) {
            factor = fp::mul(factor, fp::pow(x % p, e[v], p), p);
            rest[v] = 0;
        }
        r.add_term(rest, factor);
    }
    return r;
}

UniPoly to_unipoly(const MultiPoly& f, std::uint32_t var) {
    if (var >= f.arity()) throw VarOutOfRange("variable index out of range");
    const long d = f.degree_in(var);
    if (d > 10'000'000) throw EnumerationTooLarge("dense conversion beyond desk scale");
    std::vector<std::uint64_t> c(f.is_zero() ? 0 : static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [e, x] : f.terms()) {
        for (std::uint32_t k = 0; k < f.arity(); ++k)
            if (k != var && e[k] != 0)
                throw ArityMismatch("polynomial is not univariate in the requested variable");
        c[e[var]] = x;
    }
    return UniPoly(f.modulus(), std::move(c));
}

MultiPoly from_unipoly(const UniPoly& f, std::uint32_t arity, std::uint32_t var) {
    if (var >= arity) throw VarOutOfRange("variable index out of range");
    MultiPoly r(arity, f.modulus());
    ExponentVec e(arity, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        e[var] = static_cast<std::uint32_t>(i);
        r = r + MultiPoly::monomial(arity, f.modulus(), f.coeffs()[i], e);
    }
    return r;
}

}  // namespace rabin
