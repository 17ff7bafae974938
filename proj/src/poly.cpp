#include "latpos/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace latpos {

namespace {

struct VarStore {
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::string> names;
    mutable std::mutex mtx;
};

VarStore& store() {
    static VarStore s;
    return s;
}

bool valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

VarTable& VarTable::instance() {
    static VarTable t;
    return t;
}

std::uint32_t VarTable::id(const std::string& name) {
    if (!valid_var_name(name))
        raise(ErrorCode::BadArgument, "invalid indeterminate name: '" + name + "'");
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mtx);
    auto it = s.ids.find(name);
    if (it != s.ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(s.names.size());
    s.names.push_back(name);
    s.ids.emplace(name, id);
    return id;
}

std::string VarTable::name(std::uint32_t id) const {
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mtx);
    return s.names.at(id);
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first == b.factors[j].first) {
            r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i; ++j;
        } else if (a.factors[i].first < b.factors[j].first) {
            r.factors.push_back(a.factors[i++]);
        } else {
            r.factors.push_back(b.factors[j++]);
        }
    }
    for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
    return r;
}

std::string Monomial::str() const {
    // Sorted by variable name so the rendering does not depend on intern order.
    std::vector<std::pair<std::string, std::uint32_t>> named;
    named.reserve(factors.size());
    for (const auto& [v, e] : factors) named.emplace_back(VarTable::instance().name(v), e);
    std::sort(named.begin(), named.end());
    std::string out;
    for (const auto& [n, e] : named) {
        if (!out.empty()) out += '*';
        out += n;
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

MultiPoly MultiPoly::var(const std::string& name, unsigned power) {
    MultiPoly p;
    if (power == 0) return MultiPoly(1);
    Monomial m;
    m.factors.emplace_back(VarTable::instance().id(name), power);
    p.terms_.emplace(std::move(m), Integer(1));
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer MultiPoly::constant_value() const {
    if (terms_.empty()) return Integer(0);
    if (terms_.size() == 1 && terms_.begin()->first.factors.empty())
        return terms_.begin()->second;
    raise(ErrorCode::SymbolicTermsUnsupported,
          "expected a constant polynomial, got '" + str() + "'");
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    std::uint32_t v = VarTable::instance().id(var);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Monomial::mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Integer& value) const {
    std::uint32_t v = VarTable::instance().id(var);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Integer coeff = c;
        Monomial rest;
        for (const auto& [mv, me] : m.factors) {
            if (mv == v) {
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), me);
                coeff *= p;
            } else {
                rest.factors.emplace_back(mv, me);
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, unsigned power) const {
    std::uint32_t v = VarTable::instance().id(var);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(v) != power) continue;
        Monomial rest;
        for (const auto& [mv, me] : m.factors)
            if (mv != v) rest.factors.emplace_back(mv, me);
        r.add_term(rest, c);
    }
    return r;
}

namespace {

// Print order: total degree descending, ties broken by the name-based
// monomial string ascending. Deterministic across runs.
std::vector<std::pair<const Monomial*, const Integer*>>
print_order(const std::map<Monomial, Integer>& terms) {
    std::vector<std::pair<const Monomial*, const Integer*>> v;
    v.reserve(terms.size());
    for (const auto& [m, c] : terms) v.emplace_back(&m, &c);
    std::vector<std::string> keys(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) keys[i] = v[i].first->str();
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        unsigned da = v[a].first->total_degree(), db = v[b].first->total_degree();
        if (da != db) return da > db;
        return keys[a] < keys[b];
    });
    std::vector<std::pair<const Monomial*, const Integer*>> out;
    out.reserve(v.size());
    for (std::size_t i : idx) out.push_back(v[i]);
    return out;
}

} // namespace

std::optional<std::pair<Monomial, Integer>> MultiPoly::first_negative_term() const {
    const Monomial* best = nullptr;
    const Integer* bc = nullptr;
    std::string best_key;
    unsigned best_deg = 0;
    for (const auto& [m, c] : terms_) {
        if (c >= 0) continue;
        std::string key = m.str();
        unsigned deg = m.total_degree();
        // smallest under (degree desc, name asc) == first in print order
        bool better = best == nullptr || deg > best_deg || (deg == best_deg && key < best_key);
        if (better) {
            best = &m;
            bc = &c;
            best_key = std::move(key);
            best_deg = deg;
        }
    }
    if (!best) return std::nullopt;
    return std::make_pair(*best, *bc);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mp, cp] : print_order(terms_)) {
        const Integer& c = *cp;
        std::string mono = mp->str();
        bool neg = c < 0;
        Integer a = neg ? Integer(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        if (mono.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += '*';
            }
            out += mono;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorCode::ParseError,
              "polynomial parse error at offset " + std::to_string(pos) + ": " + what +
              " in '" + s + "'");
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    // term := integer (* factor)* | factor (* factor)*
    MultiPoly term() {
        MultiPoly acc(1);
        bool first = true;
        for (;;) {
            char c = peek();
            if (first && std::isdigit(static_cast<unsigned char>(c))) {
                acc *= MultiPoly(integer());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = identifier();
                unsigned e = 1;
                if (peek() == '^') {
                    ++pos;
                    Integer ei = integer();
                    if (ei < 0 || !ei.fits_uint_p()) fail("bad exponent");
                    e = static_cast<unsigned>(ei.get_ui());
                }
                acc *= MultiPoly::var(name, e);
            } else {
                fail("expected a coefficient or variable");
            }
            first = false;
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        return acc;
    }

    MultiPoly poly() {
        MultiPoly acc;
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos;
        }
        for (;;) {
            MultiPoly t = term();
            if (neg)
                acc -= t;
            else
                acc += t;
            if (eof()) break;
            char op = peek();
            if (op == '+' || op == '-') {
                neg = (op == '-');
                ++pos;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return acc;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) raise(ErrorCode::ParseError, "empty polynomial text");
    if (p.peek() == '0') {
        std::size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return MultiPoly();
        p.pos = save;
    }
    return p.poly();
}

MultiPoly binomial(const Integer& n, const Integer& k) {
    if (k < 0 || n < 0 || k > n) return MultiPoly(0);
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return MultiPoly(r);
}

MultiPoly pow(const MultiPoly& base, unsigned e) {
    MultiPoly r(1);
    MultiPoly b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

} // namespace latpos
